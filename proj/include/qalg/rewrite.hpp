// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qalg/poly.hpp"

namespace qalg {

/// Monic rewrite rule lead -> tail; every word of the tail is deglex-smaller
/// than the lead.
template <class K>
struct RewriteRule {
  Word lead;
  Polynomial<K> tail;

  size_t degree() const { return lead.size(); }

  /// The ideal element lead - tail, with unit lead coefficient.
  Polynomial<K> element(const K& one) const {
    Polynomial<K> p = -tail;
    p.add(lead, one);
    return p;
  }
};

template <class K>
struct RewriteSystem {
  std::vector<RewriteRule<K>> rules;
  size_t degree_bound = 0;
  size_t certified_to = 0;

  std::vector<Word> obstructions() const {
    std::vector<Word> v;
    v.reserve(rules.size());
    for (const auto& r : rules) v.push_back(r.lead);
    return v;
  }
};

/// A superposition word admitting two rule applications. For an overlap,
/// rule_a applies at position 0 and rule_b at pos_b > 0; for an inclusion,
/// the superposition is lead_a and rule_b applies inside it.
struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind;
  size_t rule_a;
  size_t rule_b;
  Word superposition;
  size_t pos_b;

  size_t degree() const { return superposition.size(); }
};

/// One step of a reduction trace: the term c * u * (lead_i - tail_i) * v was
/// subtracted.
template <class K>
struct TraceStep {
  size_t rule;
  Word left;
  Word right;
  K coeff;
};

namespace detail {

/// Leftmost redex in w; ties at a position broken by longer lead, then
/// lower rule index. Returns (rule index, position) or nullopt.
template <class K>
std::optional<std::pair<size_t, size_t>> find_redex(const Word& w,
                                                    const std::vector<RewriteRule<K>>& rules) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<size_t> best;
    for (size_t i = 0; i < rules.size(); ++i) {
      const Word& lead = rules[i].lead;
      if (lead.empty() || pos + lead.size() > w.size()) continue;
      if (!std::equal(lead.begin(), lead.end(), w.begin() + pos)) continue;
      if (!best || rules[i].lead.size() > rules[*best].lead.size()) best = i;
    }
    if (best) return std::make_pair(*best, pos);
  }
  return std::nullopt;
}

}  // namespace detail

/// Fully reduce p: while some word of p contains a lead word, rewrite the
/// deglex-largest reducible word at its leftmost redex. Terminates because
/// each step strictly decreases in the deglex order.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<RewriteRule<K>>& rules,
                          std::vector<TraceStep<K>>* trace = nullptr) {
  Polynomial<K> cur = p;
  while (true) {
    const Word* hit = nullptr;
    std::pair<size_t, size_t> redex;
    for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
      auto r = detail::find_redex(it->first, rules);
      if (r) {
        hit = &it->first;
        redex = *r;
        break;
      }
    }
    if (!hit) return cur;
    const Word w = *hit;
    const K c = cur.terms().at(w);
    const auto& rule = rules[redex.first];
    Word left(w.begin(), w.begin() + redex.second);
    Word right(w.begin() + redex.second + rule.lead.size(), w.end());
    cur.add(w, -c);
    for (const auto& [tw, tc] : rule.tail.terms()) cur.add(concat(left, tw, right), tc * c);
    if (trace) trace->push_back({redex.first, left, right, c});
  }
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const RewriteSystem<K>& rs,
                          std::vector<TraceStep<K>>* trace = nullptr) {
  return normal_form(p, rs.rules, trace);
}

/// Turn a nonzero polynomial into the monic rule LT(p) -> LT(p) - p/lc(p).
template <class K>
RewriteRule<K> make_rule(const Polynomial<K>& p) {
  auto [lead, lc] = p.leading_term();
  Polynomial<K> tail;
  for (const auto& [w, c] : p.terms())
    if (w != lead) tail.add(w, -(c * inv(lc)));
  return {lead, tail};
}

/// Every overlap and inclusion among the lead words, each exactly once.
template <class K>
std::vector<Ambiguity> find_ambiguities(const std::vector<RewriteRule<K>>& rules) {
  std::vector<Ambiguity> out;
  for (size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lead;
    for (size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lead;
      // Overlaps: a proper suffix of la equals a proper prefix of lb.
      for (size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
        if (std::equal(la.end() - k, la.end(), lb.begin())) {
          Word sup = la;
          sup.insert(sup.end(), lb.begin() + k, lb.end());
          out.push_back({Ambiguity::Kind::Overlap, a, b, sup, la.size() - k});
        }
      }
      // Inclusions: lb a proper factor of la, at each position.
      if (a != b && lb.size() < la.size()) {
        for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (std::equal(lb.begin(), lb.end(), la.begin() + pos))
            out.push_back({Ambiguity::Kind::Inclusion, a, b, la, pos});
        }
      }
    }
  }
  return out;
}

template <class K>
std::vector<Ambiguity> find_ambiguities(const RewriteSystem<K>& rs) {
  return find_ambiguities(rs.rules);
}

/// S-difference of the two reduction paths of the superposition, fully
/// reduced. Zero iff the ambiguity is solvable.
template <class K>
Polynomial<K> resolve_ambiguity(const Ambiguity& amb, const std::vector<RewriteRule<K>>& rules) {
  const auto& ra = rules[amb.rule_a];
  const auto& rb = rules[amb.rule_b];
  const Word& sup = amb.superposition;
  // Path 1: apply rule_a at position 0 (overlap) / as the whole word (inclusion).
  Polynomial<K> p1;
  if (amb.kind == Ambiguity::Kind::Overlap) {
    Word suffix(sup.begin() + ra.lead.size(), sup.end());
    p1 = mul_word(Word{}, ra.tail, suffix);
  } else {
    p1 = ra.tail;
  }
  // Path 2: apply rule_b at pos_b.
  Word prefix(sup.begin(), sup.begin() + amb.pos_b);
  Word suffix(sup.begin() + amb.pos_b + rb.lead.size(), sup.end());
  Polynomial<K> p2 = mul_word(prefix, rb.tail, suffix);
  return normal_form(p1, rules) - normal_form(p2, rules);
}

/// Inter-reduce until no rule's element changes under the others: lead words
/// pairwise factor-free, tails fully reduced.
template <class K, class F>
void inter_reduce(std::vector<RewriteRule<K>>& rules, const F& field) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < rules.size(); ++i) {
      std::vector<RewriteRule<K>> others;
      others.reserve(rules.size() - 1);
      for (size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      Polynomial<K> elem = rules[i].element(field.element(1));
      Polynomial<K> nf = normal_form(elem, others);
      if (nf != elem) {
        rules.erase(rules.begin() + i);
        if (!nf.zero()) rules.push_back(make_rule(nf));
        changed = true;
        break;
      }
    }
  }
}

template <class K>
struct CompletionResult {
  RewriteSystem<K> system;
  std::vector<RewriteRule<K>> added;
};

/// Diamond-lemma completion of a homogeneous presentation, resolving all
/// ambiguities of superposition degree <= D. Homogeneity makes the rule set
/// at each degree final once that degree's ambiguities are exhausted.
template <class F>
CompletionResult<typename F::Coeff> complete_to_degree(const Presentation<F>& pres, size_t D) {
  using K = typename F::Coeff;
  pres.validate();
  if (!pres.homogeneous()) throw ValidationError("completion requires homogeneous relations");
  if (D < 2) throw ValidationError("degree bound must be at least 2");

  CompletionResult<K> res;
  auto& rules = res.system.rules;
  for (const auto& rel : pres.relations) {
    Polynomial<K> nf = normal_form(rel, rules);
    if (!nf.zero()) rules.push_back(make_rule(nf));
  }
  inter_reduce(rules, pres.field);

  for (size_t deg = 3; deg <= D; ++deg) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& amb : find_ambiguities(rules)) {
        if (amb.degree() != deg) continue;
        Polynomial<K> diff = resolve_ambiguity(amb, rules);
        if (!diff.zero()) {
          RewriteRule<K> r = make_rule(diff);
          res.added.push_back(r);
          rules.push_back(std::move(r));
          inter_reduce(rules, pres.field);
          changed = true;
          break;
        }
      }
    }
  }
  res.system.degree_bound = D;
  res.system.certified_to = D;
  return res;
}

template <class K>
struct QuadraticGroebnerVerdict {
  bool holds = false;
  std::optional<Ambiguity> witness;  // a failing degree-3 ambiguity, when false
};

/// A quadratic homogeneous presentation is a Groebner basis iff every
/// degree-3 ambiguity of its inter-reduced rules resolves to zero; quadratic
/// leads admit no higher-degree superpositions.
template <class F>
QuadraticGroebnerVerdict<typename F::Coeff> is_quadratic_groebner(const Presentation<F>& pres) {
  using K = typename F::Coeff;
  pres.validate();
  if (!pres.quadratic_homogeneous())
    throw ValidationError("quadratic Groebner check requires quadratic homogeneous relations");

  std::vector<RewriteRule<K>> rules;
  for (const auto& rel : pres.relations) {
    Polynomial<K> nf = normal_form(rel, rules);
    if (!nf.zero()) rules.push_back(make_rule(nf));
  }
  inter_reduce(rules, pres.field);

  for (const auto& amb : find_ambiguities(rules)) {
    if (!resolve_ambiguity(amb, rules).zero()) return {false, amb};
  }
  return {true, std::nullopt};
}

}  // namespace qalg
