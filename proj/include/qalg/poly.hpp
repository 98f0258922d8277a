// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qalg/coeff.hpp"
#include "qalg/word.hpp"

namespace qalg {

/// Noncommutative polynomial: finite map word -> nonzero coefficient.
/// Normalized on construction; zero coefficients are never stored, so
/// equality is structural.
template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Word, K, DeglexLess>;

  Polynomial() = default;

  void add(const Word& w, const K& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  bool zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Deglex-maximal word with its coefficient. Throws on the zero polynomial.
  std::pair<Word, K> leading_term() const {
    if (terms_.empty()) throw ValidationError("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  size_t max_degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.size();
  }

  bool homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
      if (w.size() != d) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  TermMap terms_;
};

template <class K>
Polynomial<K> operator+(const Polynomial<K>& p, const Polynomial<K>& q) {
  Polynomial<K> r = p;
  for (const auto& [w, c] : q.terms()) r.add(w, c);
  return r;
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& p) {
  Polynomial<K> r;
  for (const auto& [w, c] : p.terms()) r.add(w, -c);
  return r;
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& p, const Polynomial<K>& q) {
  Polynomial<K> r = p;
  for (const auto& [w, c] : q.terms()) r.add(w, -c);
  return r;
}

template <class K>
Polynomial<K> scale(const Polynomial<K>& p, const K& c) {
  Polynomial<K> r;
  for (const auto& [w, a] : p.terms()) r.add(w, a * c);
  return r;
}

/// Bilinear concatenation product in the free algebra.
template <class K>
Polynomial<K> poly_product(const Polynomial<K>& p, const Polynomial<K>& q) {
  Polynomial<K> r;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add(concat(u, v), a * b);
  return r;
}

/// u * p * v for fixed words u, v.
template <class K>
Polynomial<K> mul_word(const Word& u, const Polynomial<K>& p, const Word& v) {
  Polynomial<K> r;
  for (const auto& [w, c] : p.terms()) r.add(concat(u, w, v), c);
  return r;
}

template <class K>
Polynomial<K> monomial(const Word& w, const K& c) {
  Polynomial<K> r;
  r.add(w, c);
  return r;
}

/// A finitely presented algebra: alphabet, coefficient field, relations.
template <class F>
struct Presentation {
  using K = typename F::Coeff;

  F field;
  Alphabet alphabet;
  std::vector<Polynomial<K>> relations;

  void validate() const {
    for (const auto& rel : relations) {
      if (rel.zero()) throw ValidationError("zero relation");
      for (const auto& [w, c] : rel.terms()) alphabet.check_word(w);
    }
  }

  bool quadratic_homogeneous() const {
    for (const auto& rel : relations) {
      if (rel.zero()) return false;
      for (const auto& [w, c] : rel.terms())
        if (w.size() != 2) return false;
    }
    return true;
  }

  bool homogeneous() const {
    for (const auto& rel : relations)
      if (!rel.homogeneous()) return false;
    return true;
  }
};

}  // namespace qalg
