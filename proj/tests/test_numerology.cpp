#include <doctest.h>

#include "dpcy/field.hpp"
#include "dpcy/numerology.hpp"
#include "oracles.hpp"

using namespace dpcy;

TEST_SUITE("numerology") {

TEST_CASE("Chern numbers agree with long division for many complete intersections") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(rng.between(1, 5));
    CISpec spec{k + 3, {}};
    for (int i = 0; i < k; ++i) spec.multidegree.push_back(static_cast<int>(rng.between(2, 6)));
    auto got = ci_chern(spec);
    auto expect = oracle::ci_chern_numbers(spec.ambient_dim, spec.multidegree);
    CHECK(got.h3 == expect[0].get_si());
    CHECK(got.c2h == expect[1].get_si());
    CHECK(got.euler == expect[2].get_si());
  }
}

TEST_CASE("series truncation does not change low coefficients") {
  for (CISpec spec : {CISpec{4, {5}}, CISpec{5, {3, 3}}, CISpec{6, {2, 2, 3}}, CISpec{7, {2, 2, 2, 2}}}) {
    auto c3 = chern_series(spec, 3);
    auto c4 = chern_series(spec, 4);
    CHECK(std::vector<std::int64_t>(c4.begin(), c4.begin() + 4) == c3);
  }
}

TEST_CASE("Chern numbers of familiar threefolds") {
  CHECK(ci_chern({4, {5}}) == CIInvariants{5, 50, -200});
  CHECK(ci_chern({5, {3, 3}}) == CIInvariants{9, 54, -144});
  CHECK(ci_chern({7, {2, 2, 2, 2}}) == CIInvariants{16, 64, -128});
  CHECK(ci_chern({5, {2, 4}}) == CIInvariants{8, 56, -176});
}

TEST_CASE("invalid complete intersections") {
  CHECK_THROWS_AS(ci_chern({5, {3}}), AlgebraError);
  CHECK_THROWS_AS(ci_chern({4, {1}}), AlgebraError);
  CHECK_THROWS_AS(ci_chern({3, {}}), AlgebraError);
}

TEST_CASE("contraction invariants") {
  CHECK(contraction_invariants(ci_chern({5, {3, 3}}), 6) == ContractionInvariants{15, 54, 7});
  CHECK(contraction_invariants(ci_chern({7, {2, 2, 2, 2}}), 8) == ContractionInvariants{24, 60, 9});
  CHECK(contraction_invariants(ci_chern({6, {2, 2, 3}}), 7) == ContractionInvariants{19, 58, 8});
  CHECK_THROWS_AS(contraction_invariants(ci_chern({5, {3, 3}}), 5), AlgebraError);
  CHECK_THROWS_AS(contraction_invariants(CIInvariants{1, 0, 0}, 6), AlgebraError);
}

TEST_CASE("Euler number chain") {
  auto e = euler_chain(ci_chern({5, {3, 3}}), 36, 6);
  CHECK(e.chi_x == -72);
  CHECK(e.chi_y == -77);
  auto f = euler_chain(ci_chern({7, {2, 2, 2, 2}}), 42, 8);
  CHECK(f.chi_x == -44);
  CHECK(f.chi_y == -47);
  auto z = euler_chain(ci_chern({4, {5}}), 0, 8);
  CHECK(z.chi_x == -200);
  CHECK(z.chi_y == -200 - 4 + 1);
  CHECK_THROWS_AS(euler_chain(ci_chern({4, {5}}), -1, 8), AlgebraError);
}

TEST_CASE("smoothed Euler numbers") {
  CHECK(euler_smoothed(39) == -76);
  CHECK(euler_smoothed(40) == -78);
  CHECK(euler_smoothed(26) == -50);
  CHECK(euler_smoothed(1) == 0);
  CHECK_THROWS_AS(euler_smoothed(-1), AlgebraError);
}

TEST_CASE("table assembly") {
  const auto rows = assemble_table1();
  REQUIRE(rows.size() == 10);
  const std::int64_t h3[] = {14, 14, 15, 15, 16, 17, 19, 20, 24};
  const std::int64_t h0[] = {7, 7, 7, 7, 7, 7, 8, 8, 9};
  const std::int64_t chi[] = {-92, -94, -76, -78, -60, -44, -74, -60, -50};
  for (int i = 0; i < 9; ++i) {
    CHECK(rows[i].contraction.g3 == h3[i]);
    CHECK(rows[i].contraction.h0 == h0[i]);
    REQUIRE(rows[i].chi_yt.has_value());
    CHECK(*rows[i].chi_yt == chi[i]);
    CHECK(rows[i].smoothing_defect.has_value());
  }
  CHECK(rows[2].contraction.c2g == 54);
  CHECK(rows[3].contraction.c2g == 54);
  CHECK_FALSE(rows[9].h12.has_value());
  CHECK_FALSE(rows[9].chi_yt.has_value());
  CHECK(rows[9].nodes == 36);
  CHECK(rows[8].nodes == 42);
  CHECK(*rows[2].smoothing_defect == 1);
  CHECK(*rows[3].smoothing_defect == -1);
  CHECK(*rows[8].smoothing_defect == -3);
  const auto text = table1_text(rows);
  CHECK(text.find("P7[2,2,2,2]") != std::string::npos);
}

TEST_CASE("degree of the contracted threefold grows down the table") {
  const auto rows = assemble_table1();
  for (int i = 1; i < 9; ++i)
    if (!(rows[i].ci.multidegree == rows[i - 1].ci.multidegree && rows[i].d == rows[i - 1].d))
      CHECK(rows[i].contraction.g3 > rows[i - 1].contraction.g3);
}

TEST_CASE("Riemann-Roch integrality on all smoothable rows") {
  for (const auto& r : assemble_table1())
    if (r.h12) CHECK((2 * r.contraction.g3 + r.contraction.c2g) % 12 == 0);
}

}
