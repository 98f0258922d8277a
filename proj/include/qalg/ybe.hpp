// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qalg/rit.hpp"

namespace qalg {

/// Exact integer linear operator on V^(tensor order), V spanned by
/// y_1..y_n, x_1..x_m in ascending generator order. Rows and columns are
/// indexed by words of length `order` in that basis order.
struct TensorOperator {
  size_t dim = 0;    // g = m + n
  size_t order = 0;  // 2 or 3
  size_t size = 0;   // dim^order
  std::vector<long long> a;  // row-major

  TensorOperator(size_t dim_, size_t order_) : dim(dim_), order(order_) {
    size = 1;
    for (size_t i = 0; i < order; ++i) size *= dim;
    a.assign(size * size, 0);
  }

  long long& at(size_t r, size_t c) { return a[r * size + c]; }
  long long at(size_t r, size_t c) const { return a[r * size + c]; }

  bool is_zero() const {
    for (long long x : a)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const TensorOperator& o) const {
    return dim == o.dim && order == o.order && a == o.a;
  }
};

inline TensorOperator operator*(const TensorOperator& A, const TensorOperator& B) {
  if (A.size != B.size) throw ValidationError("tensor operator size mismatch");
  TensorOperator C(A.dim, A.order);
  for (size_t i = 0; i < A.size; ++i)
    for (size_t k = 0; k < A.size; ++k) {
      long long x = A.at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < B.size; ++j) C.at(i, j) += x * B.at(k, j);
    }
  return C;
}

inline TensorOperator operator-(const TensorOperator& A, const TensorOperator& B) {
  if (A.size != B.size) throw ValidationError("tensor operator size mismatch");
  TensorOperator C(A.dim, A.order);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
  return C;
}

/// The operator r on V (x) V read off the relations:
///   r(x_i (x) y_j) = y_j (x) x_i + y_p (x) y_q, (p,q) = {f(i,j), j} ascending,
///   mixed-order x (x) x and y (x) y pairs are sorted ascending,
/// and everything already in normal order (ascending pairs, diagonal pairs,
/// y (x) x) is fixed.
inline TensorOperator build_r(const SigmaFamily& fam) {
  const size_t n = fam.n, g = fam.m + fam.n;
  TensorOperator r(g, 2);
  for (size_t a = 0; a < g; ++a)
    for (size_t b = 0; b < g; ++b) {
      size_t col = a * g + b;
      if (a >= n && b < n) {  // x_i (x) y_j
        size_t i = a - n + 1;
        int j = static_cast<int>(b) + 1;
        r.at(b * g + a, col) += 1;  // y_j (x) x_i
        size_t f = static_cast<size_t>(fam.apply(i, j)) - 1;
        size_t lo = std::min(f, b), hi = std::max(f, b);
        r.at(lo * g + hi, col) += 1;  // y_{f(i,j)} (x) y_j, normal-ordered
      } else if (a > b && ((a < n && b < n) || (a >= n && b >= n))) {
        r.at(b * g + a, col) += 1;  // sort the like-type pair
      } else {
        r.at(col, col) += 1;
      }
    }
  return r;
}

namespace detail {

/// r (x) 1 and 1 (x) r on V^(x)3.
inline TensorOperator extend_left(const TensorOperator& r) {
  const size_t g = r.dim;
  TensorOperator out(g, 3);
  for (size_t pq = 0; pq < g * g; ++pq)
    for (size_t ab = 0; ab < g * g; ++ab) {
      long long x = r.at(pq, ab);
      if (x == 0) continue;
      for (size_t c = 0; c < g; ++c) out.at(pq * g + c, ab * g + c) += x;
    }
  return out;
}

inline TensorOperator extend_right(const TensorOperator& r) {
  const size_t g = r.dim;
  TensorOperator out(g, 3);
  for (size_t qr = 0; qr < g * g; ++qr)
    for (size_t bc = 0; bc < g * g; ++bc) {
      long long x = r.at(qr, bc);
      if (x == 0) continue;
      for (size_t a = 0; a < g; ++a) out.at(a * g * g + qr, a * g * g + bc) += x;
    }
  return out;
}

}  // namespace detail

struct GybeResult {
  TensorOperator commutator;
  bool is_zero = false;
};

/// Forms R12 = r1 r2 r1 and R23 = r2 r1 r2 with r1 = r (x) 1, r2 = 1 (x) r,
/// and returns the exact commutator [R12, R23].
inline GybeResult gybe_commutator(const SigmaFamily& fam) {
  TensorOperator r = build_r(fam);
  TensorOperator r1 = detail::extend_left(r);
  TensorOperator r2 = detail::extend_right(r);
  TensorOperator R12 = r1 * r2 * r1;
  TensorOperator R23 = r2 * r1 * r2;
  TensorOperator comm = R12 * R23 - R23 * R12;
  bool zero = comm.is_zero();
  return {std::move(comm), zero};
}

}  // namespace qalg
