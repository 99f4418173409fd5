#include <doctest.h>

#include <algorithm>

#include "dpcy/groebner.hpp"
#include "dpcy/ideal.hpp"
#include "dpcy/parse.hpp"
#include "oracles.hpp"

using namespace dpcy;

namespace {

template <class F>
std::vector<Polynomial<F>> parse_all(std::initializer_list<const char*> texts, const RingPtr<F>& R) {
  std::vector<Polynomial<F>> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced basis matches the Macaulay staircase on 100 random ideals") {
  Rng rng(2024);
  const char* names[] = {"x", "y", "z"};
  int agreed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.between(1, 3));
    const auto order = rng.below(2) ? MonomialOrder::lex() : MonomialOrder::degrevlex();
    auto R = PolyRing<PrimeField>::make(std::vector<std::string>(names, names + n), PrimeField(32003), order);
    auto gens = oracle::random_homogeneous_ideal(R, static_cast<int>(rng.between(1, 4)), 4, rng);
    for (auto algo : {GroebnerAlgorithm::kBuchberger, GroebnerAlgorithm::kF4}) {
      GroebnerOptions opts;
      opts.algorithm = algo;
      auto G = reduced_groebner_basis(gens, order, opts);
      const int top = std::max(G.max_degree(), 4) + 3;
      auto expect = oracle::staircase_groebner(gens, top, R);
      REQUIRE(G.elements().size() == expect.size());
      bool same = true;
      for (std::size_t i = 0; i < expect.size(); ++i) same = same && G.elements()[i] == expect[i];
      CHECK(same);
      agreed += same;
    }
  }
  CHECK(agreed == 200);
}

TEST_CASE("Buchberger criterion holds on random inhomogeneous ideals") {
  Rng rng(11);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial<PrimeField>> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_form(R, static_cast<int>(rng.between(1, 3)), rng) +
                     random_form(R, static_cast<int>(rng.between(0, 1)), rng));
    auto G = reduced_groebner_basis(gens);
    CHECK(buchberger_criterion_holds(G));
    for (const auto& g : gens) CHECK(G.contains(g));
  }
}

TEST_CASE("reduced basis is canonical under generator order and scaling") {
  Rng rng(12);
  auto R = PolyRing<RationalField>::make({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = oracle::random_homogeneous_ideal(R, 3, 3, rng);
    auto G1 = reduced_groebner_basis(gens);
    std::reverse(gens.begin(), gens.end());
    for (auto& g : gens) g = g.scaled(mpq_class(-3, 2));
    gens.push_back(gens[0] + gens[1]);
    auto G2 = reduced_groebner_basis(gens);
    CHECK(G1 == G2);
  }
}

TEST_CASE("membership does not depend on the order") {
  Rng rng(13);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z", "w"});
  auto gens = oracle::random_homogeneous_ideal(R, 3, 2, rng);
  Ideal<PrimeField> I(R, gens);
  const auto& lex = I.groebner(MonomialOrder::lex());
  const auto& drl = I.groebner(MonomialOrder::degrevlex());
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rng.below(2) ? random_ideal_member(gens, 3, rng) : random_form(R, 3, rng);
    CHECK(lex.contains(f.in_ring(lex.ring())) == drl.contains(f));
  }
}

TEST_CASE("twisted cubic") {
  auto R = PolyRing<RationalField>::make({"a", "b", "c", "d"});
  auto G = reduced_groebner_basis(parse_all({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R));
  REQUIRE(G.size() == 3);
  CHECK(to_string(G.elements()[0]) == "c^2-b*d");
  auto L = reduced_groebner_basis(parse_all({"a*c - b^2", "b*d - c^2", "a*d - b*c"}, R), MonomialOrder::lex());
  CHECK(buchberger_criterion_holds(L));
  CHECK(L.size() >= 3);
}

TEST_CASE("unit ideal and zero ideal") {
  auto R = PolyRing<PrimeField>::make({"x", "y"});
  auto G = reduced_groebner_basis(parse_all({"x*y - 1", "x"}, R));
  REQUIRE(G.size() == 1);
  CHECK(G.elements()[0].is_constant());
  CHECK_THROWS_AS(reduced_groebner_basis(std::vector<Polynomial<PrimeField>>{}, MonomialOrder::degrevlex()),
                  AlgebraError);
}

TEST_CASE("division records quotients") {
  auto R = PolyRing<RationalField>::make({"x", "y"});
  auto f = parse_polynomial("x^2*y + x*y^2 + y^2", R);
  auto divisors = parse_all({"x*y - 1", "y^2 - 1"}, R);
  std::vector<Polynomial<RationalField>> q;
  auto r = divide(f, divisors, &q);
  auto back = r;
  for (std::size_t i = 0; i < q.size(); ++i) back += q[i] * divisors[i];
  CHECK(back == f);
}

TEST_CASE("syzygies of generators are syzygies") {
  Rng rng(14);
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  auto gens = oracle::random_homogeneous_ideal(R, 3, 2, rng);
  auto S = module_syzygies(gens);
  CHECK(S.generators.size() > 0);
  for (const auto& v : S.generators) {
    Polynomial<PrimeField> acc(R);
    for (std::size_t i = 0; i < gens.size(); ++i) acc += v[i] * gens[i];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("Koszul syzygies of a regular sequence") {
  auto R = PolyRing<PrimeField>::make({"x", "y", "z"});
  auto S = module_syzygies(parse_all({"x", "y", "z"}, R));
  CHECK(S.generators.size() == 3);
}

}
