// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown on malformed input: bad alphabets, mismatched fields, violated
/// preconditions. The CLI maps it to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive-search bound is exceeded. Exit code 3 in the CLI.
struct SizeBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_odd_prime(uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Residue in F_p. Carries its modulus so that values from different fields
/// cannot be mixed silently.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;
};

inline void check_same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw ValidationError("mismatched prime fields");
}

inline bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp operator+(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  uint32_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return {s, a.p};
}

inline Fp operator-(const Fp& a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }

inline Fp operator-(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return a + (-b);
}

inline Fp operator*(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return {static_cast<uint32_t>((uint64_t(a.v) * b.v) % a.p), a.p};
}

inline bool is_zero(const Fp& a) { return a.v == 0; }

/// Inverse by extended Euclid. Throws on zero.
inline Fp inv(const Fp& a) {
  if (a.v == 0) throw ValidationError("inverse of zero in F_p");
  int64_t t = 0, new_t = 1;
  int64_t r = a.p, new_r = a.v;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += a.p;
  return {static_cast<uint32_t>(t), a.p};
}

inline bool is_zero(const Rat& a) { return a == 0; }

inline Rat inv(const Rat& a) {
  if (a == 0) throw ValidationError("inverse of zero rational");
  return Rat(1) / a;
}

/// Field descriptor for F_p, p an odd prime below 2^31.
struct PrimeField {
  using Coeff = Fp;
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) {
    if (!is_odd_prime(p)) throw ValidationError("modulus must be an odd prime");
  }

  Fp element(long long x) const {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return {static_cast<uint32_t>(r), p};
  }

  Fp parse(const std::string& s) const {
    Int x;
    try {
      x = Int(s);
    } catch (const std::exception&) {
      throw ValidationError("malformed coefficient: " + s);
    }
    Int r = x % p;
    if (r < 0) r += p;
    return {r.convert_to<uint32_t>(), p};
  }

  bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Field descriptor for exact rationals (arbitrary precision, always reduced).
struct RationalField {
  using Coeff = Rat;

  Rat element(long long x) const { return Rat(x); }

  Rat parse(const std::string& s) const {
    try {
      return Rat(s);
    } catch (const std::exception&) {
      throw ValidationError("malformed coefficient: " + s);
    }
  }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace qalg
