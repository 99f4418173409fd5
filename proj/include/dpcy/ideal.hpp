#ifndef DPCY_IDEAL_HPP
#define DPCY_IDEAL_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dpcy/groebner.hpp"
#include "dpcy/random.hpp"

namespace dpcy {

/// An ideal given by generators, with a cache of reduced Groebner bases
/// keyed by monomial order. Copies share the cache.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped; generators from a ring with the same
  /// variables but another order are re-sorted into `ring`.
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens);

  static Ideal unit(const RingPtr<F>& ring);
  /// The ideal of all variables.
  static Ideal irrelevant(const RingPtr<F>& ring);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  /// Reduced basis for the ring's own order (cached).
  const GroebnerBasis<F>& groebner() const { return groebner(ring_->order()); }
  const GroebnerBasis<F>& groebner(const MonomialOrder& order) const;
  /// Seeds the cache with a basis already known to be the reduced basis.
  void adopt_groebner(GroebnerBasis<F> G) const;

  bool is_unit() const;
  bool contains(const Polynomial<F>& f) const;
  bool contains(const Ideal& J) const;
  /// Equality as ideals (reduced bases compared).
  bool same_ideal(const Ideal& J) const;

  Ideal operator+(const Ideal& J) const;
  /// Ideal generated by the elements of degree <= d (via the degrevlex basis).
  Ideal truncated(int d) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis<F>>>> bases;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// I ∩ k[remaining variables], re-expressed in the ring of the remaining
/// variables (names and weights kept, degrevlex order). `vars` are indices.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<int>& vars);
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& names);

/// Ring of the variables not listed in `vars`.
template <class F>
RingPtr<F> ring_without(const RingPtr<F>& ring, const std::vector<int>& vars);

template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J);

/// I : J = { f : f J ⊆ I }.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J);

template <class F>
struct Saturation {
  Ideal<F> ideal;
  /// Smallest k with I : J^k = I : J^inf, i.e. the number of quotient steps
  /// that change the ideal; -1 when not computed.
  int exponent = -1;
};

struct SaturationOptions {
  bool compute_exponent = true;
  /// Seed for the generic linear form used when J is the irrelevant ideal.
  Seed seed = 0x5eed;
};

/// I : J^inf. When J is the irrelevant ideal and I is homogeneous, uses
/// I : l^inf for a generic linear form l; otherwise iterates ideal_quotient.
template <class F>
Saturation<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const SaturationOptions& opts = {});

template <class F>
Saturation<F> saturate_irrelevant(const Ideal<F>& I, const SaturationOptions& opts = {});

/// Smallest k with J^k * S ⊆ I, for S ⊇ I (S = saturation of I by J).
template <class F>
int saturation_exponent(const Ideal<F>& I, const Ideal<F>& S, const Ideal<F>& J);

/// F together with every codim x codim minor of the Jacobian matrix of F.
template <class F>
Ideal<F> jacobian_ideal(const std::vector<Polynomial<F>>& polys, int codim);

/// Invertible linear substitution x_i -> sum_j M_ij x_j.
template <class F>
struct CoordinateChange {
  std::vector<std::vector<typename F::Elem>> matrix;
  int redraws = 0;

  Polynomial<F> apply(const Polynomial<F>& f) const;
  std::vector<Polynomial<F>> apply(const std::vector<Polynomial<F>>& fs) const;
  CoordinateChange inverse(const F& K) const;
};

template <class F>
CoordinateChange<F> random_coordinate_change(const RingPtr<F>& ring, Seed seed);

template <class F>
Ideal<F> generic_change_of_coordinates(const Ideal<F>& I, Seed seed,
                                       CoordinateChange<F>* used = nullptr);

/// Homogeneous ideal of the closure of the image of the map given by
/// `forms` (homogeneous of one degree in the source ring) into the
/// projective space with coordinate ring `target`.
template <class F>
Ideal<F> ideal_from_parametrization(const std::vector<Polynomial<F>>& forms,
                                    const RingPtr<F>& target);

/// Determinant of a square matrix over F; used for invertibility checks.
template <class F>
typename F::Elem dense_determinant(std::vector<std::vector<typename F::Elem>> M, const F& K);

}  // namespace dpcy

#endif  // DPCY_IDEAL_HPP
