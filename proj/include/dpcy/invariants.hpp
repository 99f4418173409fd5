#ifndef DPCY_INVARIANTS_HPP
#define DPCY_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dpcy/ideal.hpp"

namespace dpcy {

/// Integer polynomial in t; entry k is the coefficient of t^k.
using IntPoly = std::vector<std::int64_t>;

struct HilbertSeries {
  int nvars = 0;
  /// Numerator over (1-t)^nvars.
  IntPoly numerator;
  /// Krull dimension of R/I.
  int krull_dim = 0;
  /// Numerator over (1-t)^krull_dim; reduced(1) != 0 unless R/I = 0.
  IntPoly reduced;

  /// Projective dimension of V(I); -1 for the empty scheme.
  int dimension() const { return krull_dim - 1; }
  std::int64_t degree() const;
  /// Coefficient of t^d in the series, i.e. dim (R/I)_d.
  std::int64_t hilbert_function(int d) const;
  /// Value of the Hilbert polynomial at d.
  std::int64_t hilbert_polynomial(std::int64_t d) const;
  /// Coefficients of the Hilbert polynomial in powers of d (ascending).
  std::vector<mpq_class> hilbert_polynomial_coefficients() const;
};

/// Numerator (over (1-t)^nvars) of k[x]/M for a monomial ideal M, by the
/// pivot recursion with memoization.
IntPoly monomial_ideal_numerator(const std::vector<Monomial>& gens, int nvars);

template <class F>
HilbertSeries hilbert_series(const Ideal<F>& I);

template <class F>
std::int64_t hilbert_function(const Ideal<F>& I, int d);

/// dim I_d.
template <class F>
std::int64_t graded_piece_dimension(const Ideal<F>& I, int d);

struct DimensionDegree {
  int dimension;
  std::int64_t degree;
};

template <class F>
DimensionDegree dimension_degree(const Ideal<F>& I);

/// degree -> number of minimal generators.
using GeneratorCensus = std::map<int, int>;

/// A minimal homogeneous generating set chosen by graded Nakayama on
/// Macaulay matrices, degree by degree, from the reduced degrevlex basis.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I);

template <class F>
GeneratorCensus generator_census(const Ideal<F>& I);

std::string census_to_string(const GeneratorCensus& c);

/// Graded Betti numbers of R/I: (i, j) -> beta_{i,j}, with beta_{0,0} = 1.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;
  /// Internal degrees above this bound were not computed (-1: complete).
  int degree_bound = -1;

  std::int64_t at(int i, int j) const;
  int length() const;
  /// Total rank of each homological degree.
  std::vector<std::int64_t> ranks() const;
  /// Max of j - i over nonzero entries with i >= 1, plus 1: the regularity of I.
  int ideal_regularity() const;
  /// Sum over i of (-1)^i beta_{i,j} t^j.
  IntPoly alternating_sum() const;
  /// Macaulay-style grid.
  std::string to_string() const;
};

struct ResolutionOptions {
  /// Highest homological index to compute (-1: all).
  int max_level = -1;
  /// Highest internal degree to compute (-1: all).
  int degree_bound = -1;
};

struct ResolutionStats {
  /// Ranks of the (non-minimal) Schreyer resolution per level.
  std::vector<std::size_t> frame_ranks;
};

/// Minimal graded Betti numbers from a Schreyer resolution: the ranks of
/// the scalar parts of the differentials are subtracted degree by degree.
template <class F>
BettiTable betti_table(const Ideal<F>& I, const ResolutionOptions& opts = {},
                       ResolutionStats* stats = nullptr);

/// Castelnuovo-Mumford regularity of I (= reg(R/I) + 1).
template <class F>
int regularity(const Ideal<F>& I);

}  // namespace dpcy

#endif  // DPCY_INVARIANTS_HPP
