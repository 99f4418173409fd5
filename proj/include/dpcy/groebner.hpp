#ifndef DPCY_GROEBNER_HPP
#define DPCY_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "dpcy/polynomial.hpp"

namespace dpcy {

enum class GroebnerAlgorithm {
  kAuto,        // F4 for (weighted) homogeneous input, Buchberger otherwise
  kBuchberger,  // pairwise S-polynomial reduction, sugar selection
  kF4,          // degree-by-degree Macaulay-matrix reduction; homogeneous only
};

struct GroebnerOptions {
  /// For homogeneous input: ignore S-pairs above this (weighted) degree.
  /// The result is then a Groebner basis only through that degree.
  int degree_bound = -1;
  GroebnerAlgorithm algorithm = GroebnerAlgorithm::kAuto;
};

struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
};

/// A (by default reduced) Groebner basis. Elements are monic and sorted by
/// increasing leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements, bool reduced,
                int degree_bound = -1)
      : ring_(std::move(ring)),
        elements_(std::move(elements)),
        reduced_(reduced),
        degree_bound_(degree_bound) {}

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_reduced() const { return reduced_; }
  int degree_bound() const { return degree_bound_; }
  bool is_truncated() const { return degree_bound_ >= 0; }
  bool is_unit() const {
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }
  int max_degree() const {
    int d = -1;
    for (const auto& g : elements_) d = std::max(d, g.degree());
    return d;
  }

  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
  bool reduced_ = false;
  int degree_bound_ = -1;
};

/// Full reduction of f modulo the basis: repeatedly reduce the greatest
/// reducible monomial by the first basis element (in stored order) whose
/// leading monomial divides it.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G);

/// Same division algorithm against an arbitrary list of divisors; also
/// records quotients when `quotients` is non-null.
template <class F>
Polynomial<F> divide(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                     std::vector<Polynomial<F>>* quotients = nullptr);

/// Unique reduced Groebner basis of <gens> for `order`. The generators may
/// come from any ring with the same variables; the basis lives in the ring
/// with the requested order.
template <class F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens,
                                        const MonomialOrder& order,
                                        const GroebnerOptions& options = {},
                                        GroebnerStats* stats = nullptr);

/// Same as above, in the generators' own ring order.
template <class F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens,
                                        const GroebnerOptions& options = {},
                                        GroebnerStats* stats = nullptr);

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

/// Checks that every S-polynomial of the basis reduces to zero. When
/// `max_pairs` is positive only a deterministic sample of that many pairs is
/// examined (chosen by `sample_seed`).
template <class F>
bool buchberger_criterion_holds(const GroebnerBasis<F>& G, std::size_t max_pairs = 0,
                                std::uint64_t sample_seed = 0);

/// Interreduce a list that already is a Groebner basis.
template <class F>
std::vector<Polynomial<F>> interreduce(std::vector<Polynomial<F>> basis);

/// Generating set of the first syzygy module of (f_1, ..., f_r):
/// vectors v with sum v_i f_i = 0. Graded by shifts deg(f_i).
template <class F>
struct SyzygyModule {
  RingPtr<F> ring;
  int rank = 0;
  std::vector<int> shifts;
  std::vector<std::vector<Polynomial<F>>> generators;

  /// Degree of a homogeneous generator vector in the graded free module.
  int degree_of(std::size_t k) const;
};

template <class F>
SyzygyModule<F> module_syzygies(const std::vector<Polynomial<F>>& gens);

}  // namespace dpcy

#endif  // DPCY_GROEBNER_HPP
