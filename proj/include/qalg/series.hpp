// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qalg/rewrite.hpp"

namespace qalg {

/// Integer coefficient sequence c_0..c_D. Dimensions are integers, so the
/// series toolkit never touches field coefficients.
struct TruncatedSeries {
  std::vector<Int> c;

  TruncatedSeries() = default;
  explicit TruncatedSeries(size_t D) : c(D + 1, Int(0)) {}
  TruncatedSeries(std::initializer_list<long long> xs) {
    for (auto x : xs) c.emplace_back(x);
  }

  size_t truncation() const { return c.size() - 1; }
  Int& operator[](size_t i) { return c.at(i); }
  const Int& operator[](size_t i) const { return c.at(i); }

  bool operator==(const TruncatedSeries& o) const { return c == o.c; }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += c[i].str();
    }
    return s;
  }
};

inline TruncatedSeries series_one(size_t D) {
  TruncatedSeries f(D);
  f[0] = 1;
  return f;
}

/// Cauchy product truncated at the common degree.
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.truncation() != g.truncation()) throw ValidationError("mismatched truncation degrees");
  size_t D = f.truncation();
  TruncatedSeries h(D);
  for (size_t i = 0; i <= D; ++i)
    for (size_t j = 0; i + j <= D; ++j) h[i + j] += f[i] * g[j];
  return h;
}

/// Multiplicative inverse by the standard recurrence; requires c_0 = 1 so the
/// result stays integral.
inline TruncatedSeries series_inverse(const TruncatedSeries& f) {
  if (f.c.empty() || f[0] != 1) throw ValidationError("series inverse requires constant term 1");
  size_t D = f.truncation();
  TruncatedSeries g(D);
  g[0] = 1;
  for (size_t k = 1; k <= D; ++k) {
    Int s = 0;
    for (size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
    g[k] = -s;
  }
  return g;
}

/// |f|: keep coefficients while the prefix is all-nonnegative, zero from the
/// first index whose prefix contains a negative coefficient onward.
inline TruncatedSeries positive_part(const TruncatedSeries& f) {
  TruncatedSeries g(f.truncation());
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f[i] < 0) break;
    g[i] = f[i];
  }
  return g;
}

/// The componentwise lower bound |(1 - n t + n(n-1)/2 t^2)^-1| for Hilbert
/// series of algebras on n generators with n(n-1)/2 quadratic relations.
inline TruncatedSeries anick_bound(long long n, size_t D) {
  if (n < 2) throw ValidationError("anick bound requires n >= 2");
  TruncatedSeries f(D);
  f[0] = 1;
  if (D >= 1) f[1] = -n;
  if (D >= 2) f[2] = n * (n - 1) / 2;
  return positive_part(series_inverse(f));
}

inline Int binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned long long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

/// 1/(1-t)^d, the series of the commutative polynomial ring on d variables.
inline TruncatedSeries pbw_series(size_t d, size_t D) {
  if (d < 1) throw ValidationError("pbw series requires d >= 1");
  TruncatedSeries f(D);
  for (size_t k = 0; k <= D; ++k) f[k] = binomial(k + d - 1, d - 1);
  return f;
}

namespace detail {

/// Aho-Corasick automaton over the obstruction prefixes. Alive states are
/// the prefixes containing no obstruction; walking it counts words avoiding
/// every obstruction as a factor.
struct ObstructionAutomaton {
  size_t g;
  // goto_[s * g + a] = next state, or npos when the step matches an obstruction.
  std::vector<size_t> goto_;
  size_t states;

  ObstructionAutomaton(const std::vector<Word>& obstructions, size_t g_) : g(g_) {
    struct Node {
      std::map<uint8_t, size_t> next;
      size_t fail = 0;
      bool terminal = false;
    };
    std::vector<Node> trie(1);
    for (const auto& ob : obstructions) {
      if (ob.empty()) throw ValidationError("empty obstruction word");
      size_t s = 0;
      for (uint8_t a : ob) {
        auto it = trie[s].next.find(a);
        if (it == trie[s].next.end()) {
          trie.push_back({});
          it = trie[s].next.emplace(a, trie.size() - 1).first;
        }
        s = it->second;
      }
      trie[s].terminal = true;
    }
    // BFS failure links; a state is terminal if any suffix is an obstruction.
    std::vector<size_t> order;
    for (auto& [a, t] : trie[0].next) order.push_back(t);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      size_t s = order[qi];
      for (auto& [a, t] : trie[s].next) {
        size_t f = trie[s].fail;
        while (f != 0 && !trie[f].next.count(a)) f = trie[f].fail;
        auto it = trie[f].next.find(a);
        trie[t].fail = (it != trie[f].next.end() && it->second != t) ? it->second : 0;
        if (trie[trie[t].fail].terminal) trie[t].terminal = true;
        order.push_back(t);
      }
    }
    states = trie.size();
    goto_.assign(states * g, npos);
    for (size_t s = 0; s < states; ++s) {
      if (trie[s].terminal) continue;
      for (size_t a = 0; a < g; ++a) {
        size_t f = s;
        while (true) {
          auto it = trie[f].next.find(static_cast<uint8_t>(a));
          if (it != trie[f].next.end()) {
            goto_[s * g + a] = trie[it->second].terminal ? npos : it->second;
            break;
          }
          if (f == 0) {
            goto_[s * g + a] = 0;
            break;
          }
          f = trie[f].fail;
        }
      }
    }
  }
};

}  // namespace detail

/// Number of words of each degree <= D over g letters avoiding every
/// obstruction as a factor. Obstructions must be pairwise incomparable under
/// factor containment (the reduced-system invariant).
inline TruncatedSeries count_normal_words(const std::vector<Word>& obstructions, size_t g,
                                          size_t D) {
  for (size_t i = 0; i < obstructions.size(); ++i)
    for (size_t j = 0; j < obstructions.size(); ++j)
      if (i != j && is_factor(obstructions[i], obstructions[j]))
        throw ValidationError("obstructions must be pairwise factor-incomparable");

  detail::ObstructionAutomaton aut(obstructions, g);
  TruncatedSeries h(D);
  std::vector<Int> cnt(aut.states, Int(0));
  // Degree-1 obstructions make the corresponding root step dead; the root
  // itself is alive unless an obstruction is empty (rejected above).
  cnt[0] = 1;
  h[0] = 1;
  for (size_t k = 1; k <= D; ++k) {
    std::vector<Int> nxt(aut.states, Int(0));
    for (size_t s = 0; s < aut.states; ++s) {
      if (cnt[s] == 0) continue;
      for (size_t a = 0; a < g; ++a) {
        size_t t = aut.goto_[s * g + a];
        if (t != npos) nxt[t] += cnt[s];
      }
    }
    cnt.swap(nxt);
    for (const auto& x : cnt) h[k] += x;
  }
  return h;
}

template <class K>
TruncatedSeries count_normal_words(const RewriteSystem<K>& rs, size_t g, size_t D) {
  return count_normal_words(rs.obstructions(), g, D);
}

struct HilbertResult {
  TruncatedSeries series;
  bool certified = false;
};

/// Graded dimensions of a homogeneous quadratic algebra by completion plus
/// normal-word counting. Exact for every degree <= D once the completion
/// certifies to D.
template <class F>
HilbertResult hilbert_of_presentation(const Presentation<F>& pres, size_t D) {
  if (!pres.quadratic_homogeneous())
    throw ValidationError("hilbert_of_presentation requires quadratic homogeneous relations");
  auto comp = complete_to_degree(pres, D);
  TruncatedSeries h = count_normal_words(comp.system, pres.alphabet.size(), D);
  return {h, comp.system.certified_to == D};
}

}  // namespace qalg
