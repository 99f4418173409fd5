#ifndef DPCY_DELPEZZO_HPP
#define DPCY_DELPEZZO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcy/ideal.hpp"
#include "dpcy/invariants.hpp"
#include "dpcy/matrix.hpp"

namespace dpcy {

enum class SurfaceKind { kD6, kD7, kD8, kF1 };

std::string surface_name(SurfaceKind kind);
/// Accepts "D6", "D7", "D8", "F1" (case-insensitive).
SurfaceKind parse_surface_kind(std::string_view name);

struct SurfaceRecipe {
  SurfaceKind kind = SurfaceKind::kD6;
  Seed seed = kDefaultSeed;

  int ambient_dim() const;
  int degree() const;
  /// Topological Euler number 12 - K^2.
  int euler_number() const { return 12 - degree(); }
  /// Number of quadrics minimally generating the ideal.
  int quadric_count() const;
};

/// Number of consecutive seeds tried before a construction is declared
/// degenerate.
inline constexpr int kMaxAttempts = 5;

/// Every one of the kMaxAttempts seeded draws was degenerate.
class DegenerateError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct Attempt {
  Seed seed;
  std::string reason;
};

/// A seeded result together with the draws rejected on the way.
template <class T>
struct Retried {
  T value;
  Seed seed_used = kDefaultSeed;
  std::vector<Attempt> rejected;
};

/// Coordinate names of P^8 following the construction scripts; smaller
/// ambient spaces use the tail of this list.
std::vector<std::string> ambient_names(int projective_dim);

/// Random matrix of linear forms, entries drawn row by row.
template <class F>
PolyMatrix<F> random_linear_matrix(const RingPtr<F>& ring, int rows, int cols, Rng& rng);

/// One seeded draw, without degeneracy checks.
template <class F>
Ideal<F> construct_surface_once(const SurfaceRecipe& recipe, const F& field);

/// Seeded construction; redraws with seed+1 while the result is not a
/// surface of the expected degree.
template <class F>
Retried<Ideal<F>> construct_surface(const SurfaceRecipe& recipe, const F& field = F{});

/// Image of P^2 under the cubics through one point, as a surface in P^8.
template <class F>
Ideal<F> f1_surface(const F& field, Rng& rng);

/// Generic coordinate change followed by elimination of the first `times`
/// variables (projection from a generic point, line or plane).
template <class F>
Ideal<F> project_generic(const Ideal<F>& I, int times, Seed seed);

/// Projection from the given point of the ambient space.
template <class F>
Ideal<F> project_from_point(const Ideal<F>& I, const std::vector<typename F::Elem>& point, Seed seed);

struct ProjectionSpec {
  SurfaceRecipe recipe;
  int times = 1;
  Seed seed = kDefaultSeed;
};

/// Constructs and projects; redraws the projection center while the image
/// is not a surface of the same degree.
template <class F>
Retried<Ideal<F>> project_surface(const ProjectionSpec& spec, const F& field = F{});

/// Rational point of a positive-dimensional projective scheme over a prime
/// field: slices down to points and picks a root of an eliminant.
std::optional<std::vector<PrimeField::Elem>> find_rational_point(const Ideal<PrimeField>& I, Rng& rng);

/// D8 projected from a generic point of the plane spanned by three of its
/// points, into P^7.
Retried<Ideal<PrimeField>> trisecant_plane_projection(const SurfaceRecipe& recipe, const PrimeField& field);

template <class F>
struct ResidualReport {
  Ideal<F> input;
  int cut_degree = 0;
  Ideal<F> cut;
  Ideal<F> residual;
  DimensionDegree residual_dd{-1, 0};
  /// Hilbert polynomial of the residual, ascending coefficients.
  std::vector<mpq_class> residual_hilbert_polynomial;
  bool scheme_equality = false;
  int saturation_exponent = -1;
};

/// Residual of the cut of I by its elements of degree <= d.
template <class F>
ResidualReport<F> multisecant_residual(const Ideal<F>& I, int d);

/// Random members of I of the given degrees.
template <class F>
std::vector<Polynomial<F>> random_complete_intersection(const Ideal<F>& I,
                                                        const std::vector<int>& multidegree,
                                                        Seed seed);

/// Whether a zero-dimensional saturated ideal is reduced: tests whether a
/// seeded multiplication operator has squarefree characteristic polynomial
/// of full degree. False only means no attempt certified reducedness.
template <class F>
bool certify_reduced_points(const Ideal<F>& points, Seed seed, int attempts = 3);

template <class F>
struct NodeReport {
  std::vector<int> multidegree;
  Seed seed = kDefaultSeed;
  std::vector<Polynomial<F>> ci;
  DimensionDegree ci_dd{-1, 0};
  Ideal<F> singular;
  DimensionDegree singular_dd{-1, 0};
  bool nodes_on_surface = false;
  bool reduced = false;
  /// Node count when the singular scheme is finite, otherwise -1.
  std::int64_t nodes() const { return singular_dd.dimension == 0 ? singular_dd.degree : -1; }
};

/// Singular scheme of one seeded complete intersection (no retries).
template <class F>
NodeReport<F> singular_scheme_of_ci(const Ideal<F>& I, const std::vector<int>& multidegree, Seed seed);

/// Node count with redraws while the complete intersection or its singular
/// scheme is degenerate.
template <class F>
Retried<NodeReport<F>> count_nodes(const Ideal<F>& I, const std::vector<int>& multidegree,
                                   Seed seed = kDefaultSeed);

/// True iff the seeded complete intersection is smooth.
template <class F>
bool check_smooth_ci(const Ideal<F>& I, const std::vector<int>& multidegree, Seed seed = kDefaultSeed);

template <class F>
struct LinkReport {
  std::vector<Polynomial<F>> ci;
  Ideal<F> ci_ideal;
  Ideal<F> linked;
  DimensionDegree ci_dd{-1, 0};
  DimensionDegree linked_dd{-1, 0};
};

/// Surface linked to V(I) by a seeded complete intersection: CI : I.
template <class F>
LinkReport<F> linked_surface(const Ideal<F>& I, const std::vector<int>& ci_degrees, Seed seed = kDefaultSeed);

/// Ideals of the named objects: D6, D7, D8, F1 and their projections
/// D6~, D7~, D8~, F1~ (once), D8~~ (twice), K_P (D7 twice), L_P (D8 three
/// times), D8-sec3 (from a point on a trisecant plane) and S_P0 (the
/// saturated cubic part of L_P).
template <class F>
Retried<Ideal<F>> named_surface(std::string_view name, Seed seed, const F& field = F{});

std::vector<std::string> named_surfaces();

}  // namespace dpcy

#endif  // DPCY_DELPEZZO_HPP
