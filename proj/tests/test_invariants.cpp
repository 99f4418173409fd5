#include <doctest.h>

#include "dpcy/invariants.hpp"
#include "dpcy/parse.hpp"
#include "oracles.hpp"

using namespace dpcy;

namespace {

template <class F>
Ideal<F> ideal(std::initializer_list<const char*> texts, const RingPtr<F>& R) {
  std::vector<Polynomial<F>> gens;
  for (auto t : texts) gens.push_back(parse_polynomial(t, R));
  return Ideal<F>(R, gens);
}

IntPoly trimmed(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("Hilbert function agrees with standard monomial counts") {
  Rng rng(31);
  const char* names[] = {"x", "y", "z", "w"};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.between(2, 4));
    auto R = PolyRing<PrimeField>::make(std::vector<std::string>(names, names + n));
    auto gens = oracle::random_homogeneous_ideal(R, static_cast<int>(rng.between(1, 3)), 3, rng);
    Ideal<PrimeField> I(R, gens);
    const auto hs = hilbert_series(I);
    for (int d = 0; d <= 6; ++d) CHECK(hs.hilbert_function(d) == oracle::hilbert_function(gens, d, R));
  }
}

TEST_CASE("Hilbert function equals Hilbert polynomial from the regularity on") {
  Rng rng(32);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal<PrimeField> I(R, oracle::random_homogeneous_ideal(R, 2, 3, rng));
    const auto hs = hilbert_series(I);
    const int reg = regularity(I);
    for (int d = reg - 1; d <= reg + 4; ++d) CHECK(hs.hilbert_function(d) == hs.hilbert_polynomial(d));
  }
}

TEST_CASE("twisted cubic invariants") {
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"});
  auto I = ideal({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R);
  auto dd = dimension_degree(I);
  CHECK(dd.dimension == 1);
  CHECK(dd.degree == 3);
  auto hp = hilbert_series(I).hilbert_polynomial_coefficients();
  REQUIRE(hp.size() == 2);
  CHECK(hp[0] == 1);
  CHECK(hp[1] == 3);
  auto B = betti_table(I);
  CHECK(B.at(1, 2) == 3);
  CHECK(B.at(2, 3) == 2);
  CHECK(B.length() == 2);
  CHECK(regularity(I) == 2);
  CHECK(census_to_string(generator_census(I)) == "{2:3}");
}

TEST_CASE("Betti numbers of regular sequences match the Koszul complex") {
  Rng rng(33);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  for (int trial = 0; trial < 12; ++trial) {
    const int k = static_cast<int>(rng.between(1, 4));
    std::vector<int> degrees;
    std::vector<Polynomial<PrimeField>> gens;
    for (int i = 0; i < k; ++i) {
      degrees.push_back(static_cast<int>(rng.between(1, 3)));
      gens.push_back(random_form(R, degrees.back(), rng));
    }
    auto B = betti_table(Ideal<PrimeField>(R, gens));
    auto expect = oracle::koszul_betti(degrees);
    CHECK(B.entries == expect);
  }
}

TEST_CASE("alternating sum of Betti numbers is the Hilbert numerator") {
  Rng rng(34);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  for (int trial = 0; trial < 15; ++trial) {
    Ideal<PrimeField> I(R, oracle::random_homogeneous_ideal(R, static_cast<int>(rng.between(2, 4)), 3, rng));
    CHECK(trimmed(betti_table(I).alternating_sum()) == trimmed(hilbert_series(I).numerator));
  }
}

TEST_CASE("degree bounded resolution keeps low degrees") {
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"});
  auto I = ideal({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R);
  ResolutionOptions opts;
  opts.degree_bound = 2;
  auto B = betti_table(I, opts);
  CHECK(B.at(1, 2) == 3);
  CHECK(B.at(2, 3) == 0);
  CHECK(B.to_string().find("degrees <= 2") != std::string::npos);
}

TEST_CASE("census counts minimal generators") {
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  auto I = ideal({"x^2", "x*y", "x^3 + y^3", "x^2*y + z^3", "x*y*z"}, R);
  CHECK(census_to_string(generator_census(I)) == "{2:2, 3:2}");
  CHECK(minimal_generators(I).size() == 4);
}

TEST_CASE("graded pieces of a complete intersection") {
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  auto I = ideal({"x^2 + y*z", "z^3 - w^3"}, R);
  CHECK(graded_piece_dimension(I, 1) == 0);
  CHECK(graded_piece_dimension(I, 2) == 1);
  CHECK(graded_piece_dimension(I, 3) == 5);
  CHECK(dimension_degree(I).degree == 6);
}

TEST_CASE("unit ideal and inhomogeneous input are rejected") {
  auto R = PolyRing<PrimeField>::make({"x", "y"});
  CHECK_THROWS_AS(dimension_degree(Ideal<PrimeField>::unit(R)), AlgebraError);
  CHECK_THROWS_AS(hilbert_series(ideal({"x + 1"}, R)), AlgebraError);
}

TEST_CASE("monomial numerator") {
  auto n = monomial_ideal_numerator({Monomial::from_exponents(std::vector<int>{1, 1})}, 2);
  CHECK(trimmed(n) == IntPoly{1, 0, -1});
}

}
