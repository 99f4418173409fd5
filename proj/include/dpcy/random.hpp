#ifndef DPCY_RANDOM_HPP
#define DPCY_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dpcy/polynomial.hpp"

namespace dpcy {

using Seed = std::uint64_t;

inline constexpr Seed kDefaultSeed = 7;

/// Range of the small integers drawn as "random" rational coefficients.
inline constexpr std::int64_t kRationalCoeffBound = 7;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic generator. Only raw engine output is used (no standard
/// distributions), so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : seed_(seed), eng_(splitmix64(seed)) {}

  Seed seed() const { return seed_; }
  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Independent child stream keyed by `stream`.
  Rng fork(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

 private:
  Seed seed_;
  std::mt19937_64 eng_;
};

inline PrimeField::Elem random_element(const PrimeField& K, Rng& rng) {
  return static_cast<PrimeField::Elem>(rng.below(K.characteristic()));
}
inline RationalField::Elem random_element(const RationalField& K, Rng& rng) {
  return K.from_int(rng.between(-kRationalCoeffBound, kRationalCoeffBound));
}

template <class F>
typename F::Elem random_nonzero_element(const F& K, Rng& rng) {
  for (;;) {
    auto c = random_element(K, rng);
    if (!K.is_zero(c)) return c;
  }
}

/// Random form of standard degree d in all variables.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, int d, Rng& rng) {
  std::vector<Term<F>> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d))
    terms.push_back({m, random_element(ring->field(), rng)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

/// Random element of degree d of the ideal generated by homogeneous `gens`:
/// sum of r_g * g with random forms r_g of the complementary degree.
template <class F>
Polynomial<F> random_ideal_member(const std::vector<Polynomial<F>>& gens, int d, Rng& rng) {
  if (gens.empty()) throw AlgebraError("no generators to combine");
  Polynomial<F> acc(gens.front().ring());
  for (const auto& g : gens) {
    int e = d - g.degree();
    if (g.is_zero() || e < 0) continue;
    acc += random_form(g.ring(), e, rng) * g;
  }
  return acc;
}

}  // namespace dpcy

#endif  // DPCY_RANDOM_HPP
