#include <doctest.h>

#include "dpcy/ideal.hpp"
#include "dpcy/invariants.hpp"
#include "dpcy/matrix.hpp"
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

}  // namespace

TEST_SUITE("idealops") {

TEST_CASE("elimination of a parameter") {
  auto R = PolyRing<RationalField>::make({"t", "x", "y"});
  auto J = eliminate(ideal({"x - t", "y - t^2"}, R), std::vector<std::string>{"t"});
  REQUIRE(J.size() == 1);
  CHECK(to_string(J.generators()[0]) == "x^2-y");
  auto same = eliminate(ideal({"x - t", "y - t^2"}, R), std::vector<std::string>{});
  CHECK(same.same_ideal(ideal({"x - t", "y - t^2"}, R)));
}

TEST_CASE("eliminated generators are free of the eliminated variables") {
  Rng rng(21);
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal<PrimeField> I(R, oracle::random_homogeneous_ideal(R, 3, 2, rng));
    auto J = eliminate(I, std::vector<int>{0});
    CHECK(J.ring()->index_of("a") < 0);
    std::vector<Polynomial<PrimeField>> images;
    for (const auto& name : J.ring()->names())
      images.push_back(Polynomial<PrimeField>::variable(R, R->index_of(name)));
    for (const auto& g : J.generators()) CHECK(I.contains(g.substitute(images, R)));
  }
}

TEST_CASE("projection of the displayed degree 8 surface is cut out by quadrics") {
  auto R = PolyRing<RationalField>::make({"x", "y", "z", "t", "u", "v", "w", "s", "m"});
  const char* entries[4][4] = {{"x", "y+x", "z", "t"},
                               {"y+x", "u", "v", "w"},
                               {"z", "v", "s", "m-x"},
                               {"t", "w", "m-x", "s"}};
  PolyMatrix<RationalField> M(R, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M.at(i, j) = parse_polynomial(entries[i][j], R);
  CHECK(M.is_symmetric());
  Ideal<RationalField> I(R, minors(M, 2));
  CHECK(dimension_degree(I).dimension == 2);
  CHECK(dimension_degree(I).degree == 8);
  auto J = eliminate(I, std::vector<std::string>{"x"});
  CHECK(census_to_string(generator_census(J)) == "{2:11}");
  CHECK(dimension_degree(J).degree == 8);
}

TEST_CASE("intersection and quotient of monomial ideals") {
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  CHECK(intersect(ideal({"x"}, R), ideal({"y"}, R)).same_ideal(ideal({"x*y"}, R)));
  CHECK(ideal_quotient(ideal({"x^2", "x*y"}, R), ideal({"x"}, R)).same_ideal(ideal({"x", "y"}, R)));
  auto S = saturate(ideal({"x^2", "x*y"}, R), ideal({"x", "y"}, R));
  CHECK(S.ideal.same_ideal(ideal({"x"}, R)));
  CHECK(S.exponent == 1);
}

TEST_CASE("quotient, intersection and saturation identities on random ideals") {
  Rng rng(22);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  for (int trial = 0; trial < 8; ++trial) {
    Ideal<PrimeField> I(R, oracle::random_homogeneous_ideal(R, 3, 2, rng));
    Ideal<PrimeField> J(R, oracle::random_homogeneous_ideal(R, 2, 2, rng));
    auto meet = intersect(I, J);
    CHECK(I.contains(meet));
    CHECK(J.contains(meet));
    auto Q = ideal_quotient(I, J);
    CHECK(Q.contains(I));
    for (const auto& q : Q.generators())
      for (const auto& j : J.generators()) CHECK(I.contains(q * j));
    SaturationOptions opts;
    auto S = saturate_irrelevant(I, opts);
    CHECK(saturate_irrelevant(S.ideal, opts).ideal.same_ideal(S.ideal));
    CHECK(S.ideal.contains(I));
    auto slow = saturate(I, Ideal<PrimeField>::irrelevant(R));
    CHECK(slow.ideal.same_ideal(S.ideal));
  }
}

TEST_CASE("saturation removes an embedded irrelevant component") {
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"});
  auto cubic = ideal({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R);
  std::vector<Polynomial<PrimeField>> products;
  for (const auto& g : cubic.generators())
    for (int v = 0; v < 4; ++v) products.push_back(g * Polynomial<PrimeField>::variable(R, v));
  Ideal<PrimeField> cut(R, products);
  CHECK_FALSE(cut.same_ideal(cubic));
  auto S = saturate_irrelevant(cut);
  CHECK(S.ideal.same_ideal(cubic));
  CHECK(S.exponent == 1);
}

TEST_CASE("image of a parametrization") {
  auto S = PolyRing<RationalField>::make({"s", "t"});
  auto T = PolyRing<RationalField>::make({"a", "b", "c", "d"});
  std::vector<Polynomial<RationalField>> forms;
  for (auto f : {"s^3", "s^2*t", "s*t^2", "t^3"}) forms.push_back(parse_polynomial(f, S));
  auto I = ideal_from_parametrization(forms, T);
  CHECK(I.same_ideal(ideal({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, T)));
}

TEST_CASE("generic coordinate change preserves Hilbert data") {
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d"});
  auto I = ideal({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R);
  CoordinateChange<PrimeField> used;
  auto J = generic_change_of_coordinates(I, 3, &used);
  CHECK(dimension_degree(J).degree == 3);
  CHECK(generator_census(J) == generator_census(I));
  auto back = used.inverse(R->field());
  CHECK(Ideal<PrimeField>(R, back.apply(J.generators())).same_ideal(I));
}

TEST_CASE("Jacobian ideal of a nodal cubic curve") {
  auto R = PolyRing<RationalField>::make({"x", "y", "z"});
  std::vector<Polynomial<RationalField>> f{parse_polynomial("y^2*z - x^3 - x^2*z", R)};
  auto S = saturate_irrelevant(jacobian_ideal(f, 1)).ideal;
  CHECK(dimension_degree(S).dimension == 0);
  CHECK(dimension_degree(S).degree == 1);
}

TEST_CASE("dense determinant agrees with the Leibniz formula") {
  Rng rng(23);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  for (int n = 1; n <= 4; ++n) {
    PolyMatrix<PrimeField> M(R, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = random_form(R, 1, rng);
    CHECK(determinant(M) == oracle::leibniz_determinant(M));
    std::vector<PrimeField::Elem> p{3, 5, 11};
    std::vector<std::vector<PrimeField::Elem>> D(n, std::vector<PrimeField::Elem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D[i][j] = M.at(i, j).evaluate(p);
    CHECK(dense_determinant(D, R->field()) == determinant(M).evaluate(p));
  }
}

TEST_CASE("minors of a generic 2x3 matrix") {
  auto R = PolyRing<PrimeField>::make({"a", "b", "c", "d", "e", "f"});
  PolyMatrix<PrimeField> M(R, 2, 3);
  for (int j = 0; j < 3; ++j) {
    M.at(0, j) = Polynomial<PrimeField>::variable(R, j);
    M.at(1, j) = Polynomial<PrimeField>::variable(R, 3 + j);
  }
  Ideal<PrimeField> I(R, minors(M, 2));
  CHECK(I.size() == 3);
  auto dd = dimension_degree(I);
  CHECK(dd.dimension == 3);
  CHECK(dd.degree == 3);
}

}
