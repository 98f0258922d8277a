#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qalg/rewrite.hpp"
#include "qalg/rit.hpp"

using namespace qalg;

namespace {

// Alphabet [y, x]: y = 0, x = 1, so x > y in deglex.
const Word Y{0};
const Word X{1};

RationalField QQ;

/// The single rule xy -> yx + y^2 (a Groebner basis: xy has no self-overlap).
std::vector<RewriteRule<Rat>> weyl_like_rule() {
  Polynomial<Rat> tail;
  tail.add({0, 1}, Rat(1));
  tail.add({0, 0}, Rat(1));
  return {{Word{1, 0}, tail}};
}

Polynomial<Rat> word_poly(std::initializer_list<std::pair<Word, long long>> terms) {
  Polynomial<Rat> p;
  for (const auto& [w, c] : terms) p.add(w, Rat(c));
  return p;
}

/// Independent reduction oracle: substitute the rule at the *rightmost* redex
/// of an arbitrary reducible word instead, one step at a time. Any reduction
/// strategy must agree with normal_form on a confluent system.
Polynomial<Rat> reduce_rightmost(Polynomial<Rat> p, const std::vector<RewriteRule<Rat>>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [w, c] : p.terms()) {
      std::optional<std::pair<size_t, size_t>> hit;
      for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t i = 0; i < rules.size(); ++i) {
          const Word& lead = rules[i].lead;
          if (pos + lead.size() <= w.size() &&
              std::equal(lead.begin(), lead.end(), w.begin() + pos))
            hit = {i, pos};
        }
      if (!hit) continue;
      const auto& rule = rules[hit->first];
      Word left(w.begin(), w.begin() + hit->second);
      Word right(w.begin() + hit->second + rule.lead.size(), w.end());
      Word word = w;
      Rat coeff = c;
      p.add(word, -coeff);
      for (const auto& [tw, tc] : rule.tail.terms()) p.add(concat(left, tw, right), tc * coeff);
      changed = true;
      break;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("normal form of xxy under xy -> yx + yy") {
  auto rules = weyl_like_rule();
  auto nf = normal_form(monomial(Word{1, 1, 0}, Rat(1)), rules);
  // xxy = yxx + 2 yyx + 2 yyy, worked out by expanding both branches by hand.
  auto expect = word_poly({{{0, 1, 1}, 1}, {{0, 0, 1}, 2}, {{0, 0, 0}, 2}});
  CHECK(nf == expect);
  CHECK(reduce_rightmost(monomial(Word{1, 1, 0}, Rat(1)), rules) == expect);
}

TEST_CASE("normal form basics") {
  auto rules = weyl_like_rule();

  SUBCASE("irreducible polynomials are fixed") {
    auto p = word_poly({{{0, 0, 1}, 3}, {{0, 1}, -1}, {{}, 5}});
    CHECK(normal_form(p, rules) == p);
  }
  SUBCASE("zero polynomial") {
    CHECK(normal_form(Polynomial<Rat>{}, rules).zero());
  }
  SUBCASE("idempotence on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      Polynomial<Rat> p;
      for (int k = 0; k < 4; ++k) {
        Word w;
        for (size_t l = rng() % 5; l--;) w.push_back(static_cast<uint8_t>(rng() % 2));
        p.add(w, Rat(static_cast<long long>(rng() % 9) - 4));
      }
      auto nf = normal_form(p, rules);
      CHECK(normal_form(nf, rules) == nf);
      CHECK(reduce_rightmost(p, rules) == nf);
    }
  }
  SUBCASE("linearity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      Polynomial<Rat> p, q;
      for (int k = 0; k < 3; ++k) {
        Word w, v;
        for (size_t l = rng() % 4; l--;) w.push_back(static_cast<uint8_t>(rng() % 2));
        for (size_t l = rng() % 4; l--;) v.push_back(static_cast<uint8_t>(rng() % 2));
        p.add(w, Rat(static_cast<long long>(rng() % 7) - 3));
        q.add(v, Rat(static_cast<long long>(rng() % 7) - 3));
      }
      CHECK(normal_form(p + q, rules) == normal_form(p, rules) + normal_form(q, rules));
    }
  }
}

TEST_CASE("trace reconstructs the reduction") {
  auto rules = weyl_like_rule();
  std::mt19937_64 rng(23);
  const Rat one(1);
  for (int t = 0; t < 25; ++t) {
    Polynomial<Rat> p;
    for (int k = 0; k < 4; ++k) {
      Word w;
      for (size_t l = rng() % 6; l--;) w.push_back(static_cast<uint8_t>(rng() % 2));
      p.add(w, Rat(static_cast<long long>(rng() % 9) - 4));
    }
    std::vector<TraceStep<Rat>> trace;
    auto nf = normal_form(p, rules, &trace);
    Polynomial<Rat> sum;
    for (const auto& step : trace)
      sum = sum + scale(mul_word(step.left, rules[step.rule].element(one), step.right), step.coeff);
    CHECK(p - nf == sum);
  }
}

TEST_CASE("make_rule is monic with smaller tail") {
  auto p = word_poly({{{1, 0}, 3}, {{0, 1}, -6}, {{0, 0}, 9}});
  auto r = make_rule(p);
  CHECK(r.lead == Word{1, 0});
  CHECK(r.tail == word_poly({{{0, 1}, 2}, {{0, 0}, -3}}));
  CHECK_THROWS_AS(make_rule(Polynomial<Rat>{}), ValidationError);
}

TEST_CASE("ambiguity enumeration") {
  auto rule_of = [](const Word& lead) { return RewriteRule<Rat>{lead, {}}; };

  SUBCASE("single quadratic lead xy has none") {
    CHECK(find_ambiguities(std::vector{rule_of({1, 0})}).empty());
  }
  SUBCASE("aa self-overlaps in aaa") {
    auto ambs = find_ambiguities(std::vector{rule_of({0, 0})});
    REQUIRE(ambs.size() == 1);
    CHECK(ambs[0].kind == Ambiguity::Kind::Overlap);
    CHECK(ambs[0].superposition == Word{0, 0, 0});
    CHECK(ambs[0].pos_b == 1);
  }
  SUBCASE("x2x1 and x1y1 overlap in x2x1y1") {
    // Alphabet [y1, x1, x2] = [0, 1, 2].
    auto ambs = find_ambiguities(std::vector{rule_of({2, 1}), rule_of({1, 0})});
    REQUIRE(ambs.size() == 1);
    CHECK(ambs[0].rule_a == 0);
    CHECK(ambs[0].rule_b == 1);
    CHECK(ambs[0].superposition == Word{2, 1, 0});
  }
  SUBCASE("inclusion of xy in xxyy") {
    auto ambs = find_ambiguities(std::vector{rule_of({1, 1, 0, 0}), rule_of({1, 0})});
    size_t inclusions = 0;
    for (const auto& a : ambs)
      if (a.kind == Ambiguity::Kind::Inclusion) {
        ++inclusions;
        CHECK(a.rule_a == 0);
        CHECK(a.rule_b == 1);
        CHECK(a.pos_b == 1);
      }
    CHECK(inclusions == 1);
  }
}

TEST_CASE("completion leaves a Groebner presentation unchanged") {
  auto pres = fixtures::r11_presentation(QQ);
  auto res = complete_to_degree(pres, 6);
  CHECK(res.added.empty());
  REQUIRE(res.system.rules.size() == 1);
  CHECK(res.system.rules[0].lead == Word{1, 0});
  CHECK(res.system.certified_to == 6);
  for (const auto& amb : find_ambiguities(res.system))
    CHECK(resolve_ambiguity(amb, res.system.rules).zero());
}

TEST_CASE("completion of a non-Groebner quadratic family adds cubic rules") {
  // sigma_1 = id, sigma_2 = the swap on two points.
  auto fam = parse_sigma("1,2;2,1");
  auto pres = rit_presentation(fam, QQ);
  auto res = complete_to_degree(pres, 4);

  size_t deg2 = 0, deg3 = 0, deg4 = 0;
  for (const auto& r : res.system.rules) {
    if (r.degree() == 2) ++deg2;
    if (r.degree() == 3) ++deg3;
    if (r.degree() == 4) ++deg4;
  }
  CHECK(deg2 == 6);
  CHECK(deg3 >= 1);
  CHECK(!res.added.empty());

  // All ambiguities within the bound now resolve.
  for (const auto& amb : find_ambiguities(res.system)) {
    if (amb.degree() <= 4) CHECK(resolve_ambiguity(amb, res.system.rules).zero());
  }

  // Completing further must not disturb the low degrees (homogeneity).
  auto res6 = complete_to_degree(pres, 6);
  size_t deg2b = 0, deg3b = 0;
  for (const auto& r : res6.system.rules) {
    if (r.degree() == 2) ++deg2b;
    if (r.degree() == 3) ++deg3b;
  }
  CHECK(deg2b == deg2);
  CHECK(deg3b == deg3);
}

TEST_CASE("completion of the dense three-generator example") {
  auto pres = fixtures::dense_f17_example();
  auto res = complete_to_degree(pres, 6);
  size_t deg2 = 0;
  for (const auto& r : res.system.rules)
    if (r.degree() == 2) ++deg2;
  CHECK(deg2 == 3);
  for (const auto& amb : find_ambiguities(res.system)) {
    if (amb.degree() <= 6) CHECK(resolve_ambiguity(amb, res.system.rules).zero());
  }
  // Relations reduce to zero modulo the completed system.
  for (const auto& rel : pres.relations) CHECK(normal_form(rel, res.system).zero());
}

TEST_CASE("inter-reduction removes redundant rules") {
  // Rules xy -> 0 and xyy -> yyy: the second reduces to yyy -> 0 is wrong;
  // it reduces via the first to -yyy, i.e. the rule yyy -> 0.
  std::vector<RewriteRule<Rat>> rules;
  rules.push_back({Word{1, 0}, {}});
  Polynomial<Rat> tail;
  tail.add({0, 0, 0}, Rat(1));
  rules.push_back({Word{1, 0, 0}, tail});
  inter_reduce(rules, QQ);
  REQUIRE(rules.size() == 2);
  bool has_xy = false, has_yyy = false;
  for (const auto& r : rules) {
    if (r.lead == Word{1, 0}) has_xy = r.tail.zero();
    if (r.lead == Word{0, 0, 0}) has_yyy = r.tail.zero();
  }
  CHECK(has_xy);
  CHECK(has_yyy);
}

TEST_CASE("quadratic Groebner detection") {
  SUBCASE("xy - yx - yy is Groebner") {
    auto v = is_quadratic_groebner(fixtures::r11_presentation(QQ));
    CHECK(v.holds);
    CHECK(!v.witness);
  }
  SUBCASE("commutator xy - yx is Groebner") {
    Presentation<RationalField> pres{QQ, Alphabet({"y", "x"}), {}};
    Polynomial<Rat> p;
    p.add({1, 0}, Rat(1));
    p.add({0, 1}, Rat(-1));
    pres.relations.push_back(p);
    CHECK(is_quadratic_groebner(pres).holds);
  }
  SUBCASE("the swap family is not") {
    auto pres = rit_presentation(parse_sigma("1,2;2,1"), QQ);
    auto v = is_quadratic_groebner(pres);
    CHECK(!v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->degree() == 3);
  }
  SUBCASE("non-quadratic input is rejected") {
    Presentation<RationalField> pres{QQ, Alphabet({"y", "x"}), {}};
    pres.relations.push_back(monomial(Word{1, 1, 0}, Rat(1)));
    CHECK_THROWS_AS(is_quadratic_groebner(pres), ValidationError);
  }
}

TEST_CASE("completion input validation") {
  Presentation<RationalField> pres{QQ, Alphabet({"y", "x"}), {}};
  Polynomial<Rat> p;
  p.add({1, 0}, Rat(1));
  p.add({0}, Rat(1));  // inhomogeneous
  pres.relations.push_back(p);
  CHECK_THROWS_AS(complete_to_degree(pres, 5), ValidationError);

  auto ok = fixtures::r11_presentation(QQ);
  CHECK_THROWS_AS(complete_to_degree(ok, 1), ValidationError);
}
