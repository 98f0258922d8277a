// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qalg/series.hpp"

namespace qalg {

/// Coefficient matrix of all shifts u * p_i * v in the degree-d word basis.
/// Rows ordered by (relation index, u, v) with words in deglex order; columns
/// are the g^d degree-d words in deglex order.
struct LambdaMatrix {
  size_t degree = 0;
  uint32_t p = 0;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint32_t> entries;  // row-major, residues in [0, p)

  struct RowLabel {
    size_t relation;
    Word u;
    Word v;
  };
  std::vector<RowLabel> row_labels;

  uint32_t at(size_t r, size_t c) const { return entries[r * cols + c]; }
};

namespace detail {

inline size_t word_index(const Word& w, size_t g) {
  size_t idx = 0;
  for (uint8_t a : w) idx = idx * g + a;
  return idx;
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Per-trial seed derivation: a fixed splitmix64 mix of (seed, trial index).
inline uint64_t trial_seed(uint64_t seed, uint64_t trial) {
  return detail::splitmix64(seed ^ detail::splitmix64(trial + 1));
}

inline LambdaMatrix build_lambda(const Presentation<PrimeField>& pres, size_t d) {
  pres.validate();
  if (!pres.quadratic_homogeneous())
    throw ValidationError("lambda matrix requires quadratic homogeneous relations");
  if (d < 2) throw ValidationError("lambda matrix requires d >= 2");

  const size_t g = pres.alphabet.size();
  LambdaMatrix m;
  m.degree = d;
  m.p = pres.field.p;
  m.cols = 1;
  for (size_t i = 0; i < d; ++i) m.cols *= g;

  std::vector<std::vector<Word>> by_degree(d - 1);
  for (size_t k = 0; k <= d - 2; ++k) by_degree[k] = words_of_degree(g, k);

  for (size_t i = 0; i < pres.relations.size(); ++i)
    for (size_t du = 0; du <= d - 2; ++du)
      for (const Word& u : by_degree[du])
        for (const Word& v : by_degree[d - 2 - du]) m.row_labels.push_back({i, u, v});

  m.rows = m.row_labels.size();
  m.entries.assign(m.rows * m.cols, 0);
  for (size_t r = 0; r < m.rows; ++r) {
    const auto& lbl = m.row_labels[r];
    for (const auto& [w, c] : pres.relations[lbl.relation].terms()) {
      size_t col = detail::word_index(concat(lbl.u, w, lbl.v), g);
      m.entries[r * m.cols + col] = c.v;
    }
  }
  return m;
}

/// Exact rank over F_p by incremental Gaussian elimination. Pivot rows are
/// kept in echelon form; reduction of an incoming row delays the modulus,
/// which keeps the inner loop a plain fused multiply-add.
inline size_t rank_ff(const std::vector<uint32_t>& entries, size_t rows, size_t cols, uint32_t p) {
  std::vector<std::vector<uint32_t>> pivot_rows;  // normalized: pivot value 1
  std::vector<size_t> pivot_cols;                 // strictly increasing

  std::vector<uint64_t> buf(cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < cols; ++j) buf[j] = entries[r * cols + j];
    size_t lead = 0;  // everything before `lead` is known zero mod p
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
      size_t pc = pivot_cols[k];
      if (pc < lead) continue;
      uint64_t x = buf[pc] % p;
      if (x == 0) continue;
      uint64_t f = p - x;
      const uint32_t* pr = pivot_rows[k].data();
      for (size_t j = pc; j < cols; ++j) buf[j] += f * pr[j];
    }
    size_t col = npos;
    for (size_t j = 0; j < cols; ++j) {
      if (buf[j] % p != 0) { col = j; break; }
    }
    if (col == npos) continue;
    std::vector<uint32_t> nr(cols, 0);
    uint32_t lc = static_cast<uint32_t>(buf[col] % p);
    uint32_t li = inv(Fp{lc, p}).v;
    for (size_t j = col; j < cols; ++j)
      nr[j] = static_cast<uint32_t>((buf[j] % p) * li % p);
    auto it = std::lower_bound(pivot_cols.begin(), pivot_cols.end(), col);
    size_t pos = it - pivot_cols.begin();
    pivot_cols.insert(it, col);
    pivot_rows.insert(pivot_rows.begin() + pos, std::move(nr));
  }
  return pivot_cols.size();
}

inline size_t rank_ff(const LambdaMatrix& m) { return rank_ff(m.entries, m.rows, m.cols, m.p); }

/// dim A_d = g^d - rk Lambda_d for d >= 2; once some dimension hits zero all
/// later ones are zero (the algebra is generated in degree 1).
inline TruncatedSeries graded_dims_by_rank(const Presentation<PrimeField>& pres, size_t D) {
  const size_t g = pres.alphabet.size();
  TruncatedSeries h(D);
  h[0] = 1;
  if (D >= 1) h[1] = g;
  unsigned long long gd = g;
  for (size_t d = 2; d <= D; ++d) {
    gd *= g;
    size_t rk = rank_ff(build_lambda(pres, d));
    h[d] = Int(gd) - Int(rk);
    if (h[d] == 0) break;  // zero-propagation
  }
  return h;
}

/// r homogeneous quadratic relations with coefficients drawn uniformly from
/// F_p by a seeded generator; identical (seed, g, r, p) gives identical
/// output.
inline Presentation<PrimeField> random_presentation(size_t g, size_t r, uint32_t p,
                                                    uint64_t seed) {
  if (r < 1) throw ValidationError("random presentation requires r >= 1");
  std::vector<std::string> names;
  for (size_t i = 1; i <= g; ++i) names.push_back("x" + std::to_string(i));
  Presentation<PrimeField> pres{PrimeField(p), Alphabet(std::move(names)), {}};

  std::mt19937_64 rng(detail::splitmix64(seed));
  auto pairs = words_of_degree(g, 2);
  for (size_t i = 0; i < r; ++i) {
    Polynomial<Fp> rel;
    do {
      rel = Polynomial<Fp>();
      for (const Word& w : pairs)
        rel.add(w, Fp{static_cast<uint32_t>(rng() % p), p});
    } while (rel.zero());
    pres.relations.push_back(std::move(rel));
  }
  return pres;
}

struct TrialReport {
  size_t n = 0;
  uint32_t prime = 0;
  uint64_t seed = 0;
  std::vector<TruncatedSeries> trial_dims;  // one sequence per trial run
  bool attained = false;
  long long first_attaining = -1;
};

/// Seeded random search for a presentation in A(n, n(n-1)/2) whose graded
/// dimensions equal the Anick bound exactly. Stops at the first attaining
/// trial by default; rank attainment over F_p certifies attainment in
/// characteristic zero.
inline TrialReport verify_anick(size_t n, size_t D, uint32_t p, size_t trials, uint64_t seed,
                                bool stop_at_first = true) {
  if (n < 3) throw ValidationError("verify_anick requires n >= 3");
  const size_t r = n * (n - 1) / 2;
  TruncatedSeries bound = anick_bound(static_cast<long long>(n), D);

  TrialReport rep;
  rep.n = n;
  rep.prime = p;
  rep.seed = seed;
  for (size_t t = 0; t < trials; ++t) {
    auto pres = random_presentation(n, r, p, trial_seed(seed, t));
    TruncatedSeries dims = graded_dims_by_rank(pres, D);
    rep.trial_dims.push_back(dims);
    if (!rep.attained && dims == bound) {
      rep.attained = true;
      rep.first_attaining = static_cast<long long>(t);
      if (stop_at_first) break;
    }
  }
  return rep;
}

}  // namespace qalg
