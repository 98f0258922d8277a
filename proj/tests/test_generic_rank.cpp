#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qalg/generic_rank.hpp"

using namespace qalg;

TEST_CASE("lambda matrix layout") {
  PrimeField f7(7);
  Presentation<PrimeField> comm{f7, Alphabet({"y", "x"}), {}};
  Polynomial<Fp> p;
  p.add({1, 0}, f7.element(1));
  p.add({0, 1}, f7.element(-1));
  comm.relations.push_back(p);

  SUBCASE("one relation, degree 3: four shifts over eight words") {
    auto m = build_lambda(comm, 3);
    CHECK(m.rows == 4);
    CHECK(m.cols == 8);
    REQUIRE(m.row_labels.size() == 4);
    // (u, v) run through (e, y), (e, x), (y, e), (x, e) in deglex order.
    CHECK(m.row_labels[0].u == Word{});
    CHECK(m.row_labels[0].v == Word{0});
    CHECK(m.row_labels[3].u == Word{1});
    CHECK(m.row_labels[3].v == Word{});
    // Row 0 is y*(xy - yx)*e ... no: u = e, v = y, i.e. (xy - yx) y.
    // Columns index degree-3 words by base-g digits: xyy = 100_2 = 4, yxy = 010_2 = 2.
    CHECK(m.at(0, 4) == 1);
    CHECK(m.at(0, 2) == 7 - 1);
    CHECK(rank_ff(m) == 4);  // dim of the commutative cubic component is 8 - 4 = 4
  }
  SUBCASE("dense example, degree 2: identity-shaped shift set") {
    auto m = build_lambda(fixtures::dense_f17_example(), 2);
    CHECK(m.rows == 3);
    CHECK(m.cols == 9);
    CHECK(rank_ff(m) == 3);
  }
  SUBCASE("degree below 2 is rejected") {
    CHECK_THROWS_AS(build_lambda(comm, 1), ValidationError);
  }
}

TEST_CASE("finite-field rank") {
  SUBCASE("identity and zero") {
    std::vector<uint32_t> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(rank_ff(id, 3, 3, 17) == 3);
    std::vector<uint32_t> z(12, 0);
    CHECK(rank_ff(z, 3, 4, 17) == 0);
  }
  SUBCASE("proportional rows over F_5") {
    std::vector<uint32_t> m{1, 2, 2, 4};  // second row = 2 * first
    CHECK(rank_ff(m, 2, 2, 5) == 1);
  }
  SUBCASE("rank is invariant under row shuffles") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
      size_t rows = 4 + rng() % 5, cols = 4 + rng() % 5;
      std::vector<uint32_t> m(rows * cols);
      for (auto& x : m) x = static_cast<uint32_t>(rng() % 17);
      size_t rk = rank_ff(m, rows, cols, 17);
      CHECK(rk <= std::min(rows, cols));
      std::vector<size_t> perm(rows);
      for (size_t i = 0; i < rows; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<uint32_t> sh(rows * cols);
      for (size_t i = 0; i < rows; ++i)
        std::copy(m.begin() + perm[i] * cols, m.begin() + (perm[i] + 1) * cols,
                  sh.begin() + i * cols);
      CHECK(rank_ff(sh, rows, cols, 17) == rk);
    }
  }
  SUBCASE("duplicated rows do not raise the rank") {
    std::mt19937_64 rng(3);
    std::vector<uint32_t> m(5 * 6);
    for (auto& x : m) x = static_cast<uint32_t>(rng() % 13);
    size_t rk = rank_ff(m, 5, 6, 13);
    std::vector<uint32_t> dbl = m;
    dbl.insert(dbl.end(), m.begin(), m.end());
    CHECK(rank_ff(dbl, 10, 6, 13) == rk);
  }
}

TEST_CASE("graded dimensions by rank") {
  SUBCASE("xy - yx - yy over F_17") {
    PrimeField f(17);
    auto dims = graded_dims_by_rank(fixtures::r11_presentation(f), 5);
    CHECK(dims == TruncatedSeries{1, 2, 3, 4, 5, 6});
  }
  SUBCASE("dense example hits the bound and propagates zero") {
    auto dims = graded_dims_by_rank(fixtures::dense_f17_example(), 6);
    CHECK(dims == TruncatedSeries{1, 3, 6, 9, 9, 0, 0});
  }
  SUBCASE("agrees with completion counting on random quadratic presentations") {
    for (uint64_t seed = 100; seed < 120; ++seed) {
      size_t g = 2 + seed % 2, r = 1 + seed % 3;
      auto pres = random_presentation(g, r, 17, seed);
      CHECK(graded_dims_by_rank(pres, 4) == hilbert_of_presentation(pres, 4).series);
    }
  }
}

TEST_CASE("seeded random presentations") {
  auto a = random_presentation(3, 3, 17, 9001);
  auto b = random_presentation(3, 3, 17, 9001);
  auto c = random_presentation(3, 3, 17, 9002);
  REQUIRE(a.relations.size() == 3);
  CHECK(a.quadratic_homogeneous());
  for (size_t i = 0; i < 3; ++i) CHECK(a.relations[i] == b.relations[i]);
  bool differs = false;
  for (size_t i = 0; i < 3; ++i)
    if (a.relations[i] != c.relations[i]) differs = true;
  CHECK(differs);
  CHECK(a.alphabet.size() == 3);

  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("lower bound holds for every random presentation") {
  // The componentwise bound applies to any algebra with n generators and
  // n(n-1)/2 quadratic relations, not just the generic ones.
  auto bound = anick_bound(3, 4);
  for (uint64_t seed = 0; seed < 15; ++seed) {
    auto pres = random_presentation(3, 3, 17, seed);
    auto dims = graded_dims_by_rank(pres, 4);
    for (size_t d = 0; d <= 4; ++d) CHECK(dims[d] >= bound[d]);
  }
}

TEST_CASE("generic attainment search on three generators") {
  auto rep = verify_anick(3, 6, 17, 20, 1);
  CHECK(rep.attained);
  CHECK(rep.first_attaining >= 0);
  REQUIRE(!rep.trial_dims.empty());
  CHECK(rep.trial_dims.back() == anick_bound(3, 6));
  // Trials before the attaining one stay above the bound somewhere.
  for (long long t = 0; t < rep.first_attaining; ++t)
    CHECK(rep.trial_dims[static_cast<size_t>(t)] != anick_bound(3, 6));
  CHECK_THROWS_AS(verify_anick(2, 4, 17, 5, 1), ValidationError);
}
