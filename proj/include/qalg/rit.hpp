// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qalg/series.hpp"

namespace qalg {

/// m function tables sigma_i : {1..n} -> {1..n}. Color i is the functional
/// digraph of sigma_i, so the family doubles as an m-colored graph on n
/// vertices.
struct SigmaFamily {
  size_t m = 0;
  size_t n = 0;
  std::vector<std::vector<int>> tables;  // tables[i][j-1] in 1..n

  SigmaFamily() = default;
  SigmaFamily(size_t m_, size_t n_, std::vector<std::vector<int>> t)
      : m(m_), n(n_), tables(std::move(t)) {
    validate();
  }

  void validate() const {
    if (tables.size() != m) throw ValidationError("sigma family: wrong number of tables");
    for (const auto& t : tables) {
      if (t.size() != n) throw ValidationError("sigma family: wrong table size");
      for (int v : t)
        if (v < 1 || v > static_cast<int>(n))
          throw ValidationError("sigma family: value out of range");
    }
  }

  /// sigma_i(j), both 1-based.
  int apply(size_t i, int j) const { return tables[i - 1][j - 1]; }

  bool operator==(const SigmaFamily& o) const {
    return m == o.m && n == o.n && tables == o.tables;
  }
};

// ---------------------------------------------------------------------------
// Groebner condition on the maps
// ---------------------------------------------------------------------------

struct GrSigVerdict {
  enum class Branch { One, Two, Both, Neither };
  struct PairWitness {
    size_t i, k;                // color pair, i < k, 1-based
    std::vector<Branch> at;     // branch verdict at each point j = 1..n
  };
  bool holds = true;
  std::vector<PairWitness> pairs;
  std::vector<std::array<size_t, 3>> failures;  // (i, k, j), 1-based
};

/// For every color pair i < k and point j, test
///   (1) sigma_k(j) = sigma_i(j)        and sigma_i(sigma_k(j)) = sigma_k(sigma_i(j)),
///   (2) sigma_k(j) = sigma_k(sigma_i(j)) and sigma_i(j) = sigma_i(sigma_k(j)).
/// The relations form a reduced Groebner basis iff one branch holds at every
/// point. Composition applies the inner map first throughout.
inline GrSigVerdict grsig_check(const SigmaFamily& fam) {
  GrSigVerdict v;
  for (size_t i = 1; i <= fam.m; ++i) {
    for (size_t k = i + 1; k <= fam.m; ++k) {
      GrSigVerdict::PairWitness w{i, k, {}};
      for (int j = 1; j <= static_cast<int>(fam.n); ++j) {
        int si = fam.apply(i, j), sk = fam.apply(k, j);
        bool b1 = sk == si && fam.apply(i, sk) == fam.apply(k, si);
        bool b2 = sk == fam.apply(k, si) && si == fam.apply(i, sk);
        auto br = b1 ? (b2 ? GrSigVerdict::Branch::Both : GrSigVerdict::Branch::One)
                     : (b2 ? GrSigVerdict::Branch::Two : GrSigVerdict::Branch::Neither);
        w.at.push_back(br);
        if (br == GrSigVerdict::Branch::Neither) {
          v.holds = false;
          v.failures.push_back({i, k, static_cast<size_t>(j)});
        }
      }
      v.pairs.push_back(std::move(w));
    }
  }
  return v;
}

/// The unordered-set form of the degree-3 ambiguity condition:
/// { f(i,j), f(l,f(i,j)) } = { f(i,f(l,j)), f(l,j) } for all j and l > i.
inline bool pair_set_condition(const SigmaFamily& fam) {
  auto as_set = [](int a, int b) {
    return a <= b ? std::pair<int, int>(a, b) : std::pair<int, int>(b, a);
  };
  for (size_t i = 1; i <= fam.m; ++i)
    for (size_t l = i + 1; l <= fam.m; ++l)
      for (int j = 1; j <= static_cast<int>(fam.n); ++j) {
        int fij = fam.apply(i, j), flj = fam.apply(l, j);
        auto lhs = as_set(fij, fam.apply(l, fij));
        auto rhs = as_set(fam.apply(i, flj), flj);
        // {a,a} is a singleton: compare as sets, not multisets.
        bool lhs_single = lhs.first == lhs.second;
        bool rhs_single = rhs.first == rhs.second;
        if (lhs_single != rhs_single) return false;
        if (lhs != rhs) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// The quadratic presentation of the family
// ---------------------------------------------------------------------------

/// The quadratic presentation on y_1..y_n < x_1..x_m: commuting x's,
/// commuting y's, and x_i y_j - y_j x_i - |y_{f(i,j)} y_j| with the tail pair
/// written in ascending order.
template <class F>
Presentation<F> rit_presentation(const SigmaFamily& fam, const F& field) {
  using K = typename F::Coeff;
  std::vector<std::string> names;
  for (size_t j = 1; j <= fam.n; ++j) names.push_back("y" + std::to_string(j));
  for (size_t i = 1; i <= fam.m; ++i) names.push_back("x" + std::to_string(i));
  Presentation<F> pres{field, Alphabet(std::move(names)), {}};

  const K one = field.element(1);
  auto yi = [&](int j) { return static_cast<uint8_t>(j - 1); };
  auto xi = [&](size_t i) { return static_cast<uint8_t>(fam.n + i - 1); };

  auto commutator = [&](uint8_t hi, uint8_t lo) {
    Polynomial<K> p;
    p.add(Word{hi, lo}, one);
    p.add(Word{lo, hi}, -one);
    return p;
  };

  for (size_t i = 1; i <= fam.m; ++i)
    for (size_t j = 1; j < i; ++j) pres.relations.push_back(commutator(xi(i), xi(j)));
  for (size_t i = 1; i <= fam.n; ++i)
    for (size_t j = 1; j < i; ++j)
      pres.relations.push_back(commutator(yi(static_cast<int>(i)), yi(static_cast<int>(j))));
  for (size_t i = 1; i <= fam.m; ++i)
    for (int j = 1; j <= static_cast<int>(fam.n); ++j) {
      int f = fam.apply(i, j);
      Polynomial<K> p = commutator(xi(i), yi(j));
      Word tail = f <= j ? Word{yi(f), yi(j)} : Word{yi(j), yi(f)};
      p.add(tail, -one);
      pres.relations.push_back(std::move(p));
    }
  return pres;
}

// ---------------------------------------------------------------------------
// Structure decomposition of a map pair
// ---------------------------------------------------------------------------

struct Decomposition {
  std::vector<int> Y0, Ytilde0, P, Z;  // sorted, 1-based
  std::vector<std::pair<int, int>> pairs;  // 2-cycles covering Y0 \ Z
  struct Block {
    std::vector<int> points;
    std::array<int, 2> targets;  // sigma_a target, sigma_b target
  };
  std::vector<Block> blocks;  // partition of P
  bool valid = false;
};

/// Computes Y0, Ytilde0, P, Z from their definitions and tests the full
/// structure of a maximal-series map pair: an idempotent block action on P,
/// 2-cycle pairs covering Y0 \ Z fed by Ytilde0 \ Y0, and coinciding values
/// inside Y0 on Z.
inline Decomposition decompose_pair(const std::vector<int>& sa, const std::vector<int>& sb) {
  if (sa.size() != sb.size()) throw ValidationError("decompose_pair: tables of different size");
  const int n = static_cast<int>(sa.size());
  auto a = [&](int j) { return sa[j - 1]; };
  auto b = [&](int j) { return sb[j - 1]; };

  Decomposition d;
  std::vector<bool> inY0(n + 1, false), inYt(n + 1, false), inZ(n + 1, false);
  for (int j = 1; j <= n; ++j)
    if (a(j) == b(j)) { inY0[j] = true; d.Y0.push_back(j); }
  for (int j = 1; j <= n; ++j)
    if (inY0[j] || inY0[a(j)]) { inYt[j] = true; d.Ytilde0.push_back(j); }
  for (int j = 1; j <= n; ++j)
    if (!inYt[j]) d.P.push_back(j);
  std::vector<bool> image(n + 1, false);
  for (int j = 1; j <= n; ++j)
    if (inYt[j] && !inY0[j]) image[a(j)] = image[b(j)] = true;
  for (int j : d.Y0)
    if (!image[j]) { inZ[j] = true; d.Z.push_back(j); }

  bool ok = true;

  // P: invariant under both maps, idempotent block action (the two-map case
  // of the Omega structure); blocks are the sigma_a-fibers within P.
  std::vector<bool> inP(n + 1, false);
  for (int j : d.P) inP[j] = true;
  for (int j : d.P) {
    if (!inP[a(j)] || !inP[b(j)]) { ok = false; break; }
    if (a(a(j)) != a(j) || b(b(j)) != b(j) || a(b(j)) != a(j) || b(a(j)) != b(j)) {
      ok = false;
      break;
    }
  }
  if (ok) {
    std::map<int, Decomposition::Block> blocks;  // keyed by sigma_a target
    for (int j : d.P) blocks[a(j)].points.push_back(j);
    for (auto& [t, blk] : blocks) {
      blk.targets = {t, b(t)};
      d.blocks.push_back(blk);
    }
  }

  // Y0 \ Z: a disjoint union of pairs exchanged by both maps.
  if (ok) {
    for (int j : d.Y0) {
      if (inZ[j]) continue;
      int u = a(j);
      if (u == j || !inY0[u] || inZ[u] || a(u) != j || b(u) != j || b(j) != u) {
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    for (int j : d.Y0)
      if (!inZ[j] && j < a(j)) d.pairs.emplace_back(j, a(j));
  }

  // Ytilde0 \ Y0 lands on a pair: sigma_a(j) = j1, sigma_b(j) = j2 with both
  // maps exchanging j1 and j2 inside Y0.
  if (ok) {
    for (int j : d.Ytilde0) {
      if (inY0[j]) continue;
      int j1 = a(j), j2 = b(j);
      if (!inY0[j1] || !inY0[j2] || a(j1) != j2 || b(j1) != j2 || a(j2) != j1 || b(j2) != j1) {
        ok = false;
        break;
      }
    }
  }

  // Z: values coincide (definitionally) and stay in Y0.
  if (ok) {
    for (int j : d.Z)
      if (!inY0[a(j)]) { ok = false; break; }
  }

  d.valid = ok;
  return d;
}

// ---------------------------------------------------------------------------
// Representations of the semigroup <x_i | x_i x_j = x_i>
// ---------------------------------------------------------------------------

struct OmegaStructure {
  struct Class {
    std::vector<int> points;   // sorted, 1-based
    std::vector<int> targets;  // one per color; sigma_k sends the class here
  };
  std::vector<Class> classes;
};

struct OmegaFailure {
  size_t i, k;  // sigma_i . sigma_k != sigma_i
  int point;
};

/// Succeeds iff sigma_i(sigma_k(j)) = sigma_i(j) for all i, k, j. The classes
/// are the fibers of sigma_1; each map is constant on every class with its
/// target inside the class.
inline std::optional<OmegaStructure> omega_structure(const SigmaFamily& fam,
                                                     OmegaFailure* failure = nullptr) {
  for (size_t i = 1; i <= fam.m; ++i)
    for (size_t k = 1; k <= fam.m; ++k)
      for (int j = 1; j <= static_cast<int>(fam.n); ++j)
        if (fam.apply(i, fam.apply(k, j)) != fam.apply(i, j)) {
          if (failure) *failure = {i, k, j};
          return std::nullopt;
        }

  OmegaStructure s;
  if (fam.m == 0) {
    for (int j = 1; j <= static_cast<int>(fam.n); ++j) s.classes.push_back({{j}, {}});
    return s;
  }
  std::map<int, OmegaStructure::Class> by_fiber;
  for (int j = 1; j <= static_cast<int>(fam.n); ++j)
    by_fiber[fam.apply(1, j)].points.push_back(j);
  for (auto& [s1, cls] : by_fiber) {
    for (size_t k = 1; k <= fam.m; ++k) cls.targets.push_back(fam.apply(k, s1));
    s.classes.push_back(std::move(cls));
  }
  return s;
}

inline SigmaFamily omega_rebuild(const OmegaStructure& s, size_t m, size_t n) {
  std::vector<std::vector<int>> tables(m, std::vector<int>(n, 1));
  for (const auto& cls : s.classes)
    for (int j : cls.points)
      for (size_t k = 0; k < m; ++k) tables[k][j - 1] = cls.targets[k];
  return SigmaFamily(m, n, std::move(tables));
}

/// A faithful family satisfying sigma_i sigma_j = sigma_i: m distinct
/// constant maps for m <= 3, otherwise the base-3 construction on
/// 3 * ceil(log3 m) points with sigma_i acting per digit track (generators
/// indexed 0..m-1 so the digit vectors stay within d digits).
inline SigmaFamily omega_faithful(size_t m) {
  if (m < 1) throw ValidationError("omega_faithful requires m >= 1");
  if (m <= 3) {
    size_t n = std::max<size_t>(m, 1);
    std::vector<std::vector<int>> tables;
    for (size_t i = 1; i <= m; ++i)
      tables.push_back(std::vector<int>(n, static_cast<int>(i)));
    return SigmaFamily(m, n, std::move(tables));
  }
  size_t d = 0;
  size_t pow = 1;
  while (pow < m) { pow *= 3; ++d; }
  size_t n = 3 * d;
  // Point (track k, residue e) is 1 + 3k + e.
  std::vector<std::vector<int>> tables;
  for (size_t i = 0; i < m; ++i) {
    std::vector<int> t(n);
    size_t digits = i;
    for (size_t k = 0; k < d; ++k) {
      int dk = static_cast<int>(digits % 3);
      digits /= 3;
      for (int e = 0; e < 3; ++e) t[3 * k + e] = static_cast<int>(3 * k) + dk + 1;
    }
    tables.push_back(std::move(t));
  }
  return SigmaFamily(m, n, std::move(tables));
}

// ---------------------------------------------------------------------------
// 2-isomorphism of functional graphs
// ---------------------------------------------------------------------------

namespace detail {

/// Canonical string of a functional digraph (one out-edge per vertex):
/// AHU tree codes on the hanging trees, minimal rotation per cycle, sorted
/// multiset of cycle codes.
inline std::string functional_graph_code(const std::vector<int>& next) {
  const int n = static_cast<int>(next.size());  // 0-based map
  std::vector<int> state(n, 0);                 // 0 unseen, 1 in progress, 2 done
  std::vector<bool> on_cycle(n, false);
  for (int v = 0; v < n; ++v) {
    if (state[v] != 0) continue;
    std::vector<int> path;
    int u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = next[u];
    }
    if (state[u] == 1) {
      for (int w = u;;) {
        on_cycle[w] = true;
        w = next[w];
        if (w == u) break;
      }
    }
    for (int w : path) state[w] = 2;
  }
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (!on_cycle[v]) children[next[v]].push_back(v);

  std::vector<std::string> code(n);
  auto tree_code = [&](auto&& self, int v) -> std::string {
    std::vector<std::string> kids;
    for (int c : children[v]) kids.push_back(self(self, c));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
  };

  std::vector<std::string> cycle_codes;
  std::vector<bool> used(n, false);
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[v] || used[v]) continue;
    std::vector<std::string> ring;
    for (int w = v;;) {
      used[w] = true;
      ring.push_back(tree_code(tree_code, w));
      w = next[w];
      if (w == v) break;
    }
    // lexicographically minimal rotation
    std::string best;
    for (size_t r = 0; r < ring.size(); ++r) {
      std::string s = "[";
      for (size_t q = 0; q < ring.size(); ++q) s += ring[(r + q) % ring.size()] + ";";
      s += "]";
      if (r == 0 || s < best) best = s;
    }
    cycle_codes.push_back(best);
  }
  std::sort(cycle_codes.begin(), cycle_codes.end());
  std::string out;
  for (const auto& s : cycle_codes) out += s;
  return out;
}

}  // namespace detail

/// Glue each vertex pair forming a 2-cycle under BOTH maps, then test
/// isomorphism of the two quotient functional digraphs.
inline bool two_isomorphic(const std::vector<int>& sa, const std::vector<int>& sb) {
  if (sa.size() != sb.size()) throw ValidationError("two_isomorphic: tables of different size");
  const int n = static_cast<int>(sa.size());
  std::vector<int> rep(n + 1);
  std::iota(rep.begin(), rep.end(), 0);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (sa[u - 1] == v && sa[v - 1] == u && sb[u - 1] == v && sb[v - 1] == u) rep[v] = u;

  std::vector<int> vertex_id(n + 1, -1);
  int k = 0;
  for (int v = 1; v <= n; ++v)
    if (rep[v] == v) vertex_id[v] = k++;
  auto quotient = [&](const std::vector<int>& s) {
    std::vector<int> q(k);
    for (int v = 1; v <= n; ++v)
      if (rep[v] == v) q[vertex_id[v]] = vertex_id[rep[s[v - 1]]];
    return q;
  };
  return detail::functional_graph_code(quotient(sa)) ==
         detail::functional_graph_code(quotient(sb));
}

// ---------------------------------------------------------------------------
// Canonical forms and classification
// ---------------------------------------------------------------------------

/// Lexicographically minimal flat encoding of the family over all
/// simultaneous vertex relabelings composed with color permutations. Two
/// families are equivalent iff their encodings coincide. Exhaustive over n!
/// relabelings, so n <= 8.
inline std::vector<int> canonical_form(const SigmaFamily& fam) {
  if (fam.n > 8) throw SizeBoundError("canonical_form: n above exhaustive bound 8");
  const size_t n = fam.n;
  std::vector<int> perm(n);  // perm[old vertex - 1] = new vertex (1-based)
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<int> best;
  bool first = true;
  do {
    std::vector<std::vector<int>> conj(fam.m, std::vector<int>(n));
    for (size_t i = 0; i < fam.m; ++i)
      for (size_t j = 1; j <= n; ++j)
        conj[i][perm[j - 1] - 1] = perm[fam.tables[i][j - 1] - 1];
    // Any color permutation is allowed, so the minimum over colors is the
    // sorted table list.
    std::sort(conj.begin(), conj.end());
    std::vector<int> enc;
    for (const auto& t : conj) enc.insert(enc.end(), t.begin(), t.end());
    if (first || enc < best) {
      best = std::move(enc);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (first) best = {};  // n = 0
  return best;
}

inline SigmaFamily family_from_encoding(const std::vector<int>& enc, size_t m, size_t n) {
  std::vector<std::vector<int>> tables(m, std::vector<int>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) tables[i][j] = n == 0 ? 0 : enc.at(i * n + j);
  return SigmaFamily(m, n, std::move(tables));
}

struct ClassInfo {
  SigmaFamily representative;
  unsigned long long size = 0;  // number of families in the class
  TruncatedSeries hilbert;
  bool maximal = false;  // = GrSig condition holds
};

/// Exhaustive classification of all n^(m n) families up to equivalence, with
/// the Hilbert series (exact, over the rationals) and the maximality flag of
/// one representative per class.
inline std::vector<ClassInfo> classify(size_t m, size_t n, size_t D) {
  if (n > 8) throw SizeBoundError("classify: n above exhaustive bound 8");
  double total = n == 0 ? 1.0 : std::pow(static_cast<double>(n), static_cast<double>(m * n));
  if (total > 2e6) throw SizeBoundError("classify: family space above enumeration bound");

  std::map<std::vector<int>, unsigned long long> classes;
  std::vector<int> flat(m * n, 1);
  while (true) {
    std::vector<std::vector<int>> tables(m, std::vector<int>(n));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) tables[i][j] = flat[i * n + j];
    SigmaFamily fam(m, n, std::move(tables));
    ++classes[canonical_form(fam)];
    size_t pos = flat.size();
    while (pos > 0 && flat[pos - 1] == static_cast<int>(n)) flat[--pos] = 1;
    if (pos == 0) break;
    ++flat[pos - 1];
  }

  std::vector<ClassInfo> out;
  RationalField qq;
  for (const auto& [enc, count] : classes) {
    ClassInfo ci;
    ci.representative = family_from_encoding(enc, m, n);
    ci.size = count;
    ci.maximal = grsig_check(ci.representative).holds;
    ci.hilbert = hilbert_of_presentation(rit_presentation(ci.representative, qq), D).series;
    out.push_back(std::move(ci));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: colors separated by ';', values by ','  e.g. "1,2;1,1"
// ---------------------------------------------------------------------------

inline SigmaFamily parse_sigma(const std::string& text) {
  std::vector<std::vector<int>> tables;
  std::vector<int> cur;
  std::string num;
  auto flush_num = [&]() {
    if (num.empty()) throw ValidationError("sigma family text: missing value");
    cur.push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush_num();
    } else if (c == ';') {
      flush_num();
      tables.push_back(std::move(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      num += c;
    } else if (c != ' ') {
      throw ValidationError(std::string("sigma family text: unexpected character '") + c + "'");
    }
  }
  flush_num();
  tables.push_back(std::move(cur));
  size_t n = tables[0].size();
  for (const auto& t : tables)
    if (t.size() != n) throw ValidationError("sigma family text: tables of different size");
  size_t m = tables.size();
  return SigmaFamily(m, n, std::move(tables));
}

inline std::string format_sigma(const SigmaFamily& fam) {
  std::string s;
  for (size_t i = 0; i < fam.m; ++i) {
    if (i) s += ';';
    for (size_t j = 0; j < fam.n; ++j) {
      if (j) s += ',';
      s += std::to_string(fam.tables[i][j]);
    }
  }
  return s;
}

}  // namespace qalg
