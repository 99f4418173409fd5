#include "dpcy/delpezzo.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>

#include "dpcy/univariate.hpp"

namespace dpcy {

std::string surface_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kD6: return "D6";
    case SurfaceKind::kD7: return "D7";
    case SurfaceKind::kD8: return "D8";
    case SurfaceKind::kF1: return "F1";
  }
  return "?";
}

SurfaceKind parse_surface_kind(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "D6") return SurfaceKind::kD6;
  if (s == "D7") return SurfaceKind::kD7;
  if (s == "D8") return SurfaceKind::kD8;
  if (s == "F1") return SurfaceKind::kF1;
  throw AlgebraError("unknown surface '" + std::string(name) + "'");
}

int SurfaceRecipe::ambient_dim() const {
  switch (kind) {
    case SurfaceKind::kD6: return 6;
    case SurfaceKind::kD7: return 7;
    default: return 8;
  }
}

int SurfaceRecipe::degree() const { return ambient_dim(); }

int SurfaceRecipe::quadric_count() const {
  switch (kind) {
    case SurfaceKind::kD6: return 9;
    case SurfaceKind::kD7: return 14;
    default: return 20;
  }
}

std::vector<std::string> ambient_names(int projective_dim) {
  static const std::vector<std::string> all{"x", "y", "z", "t", "u", "v", "w", "p", "q"};
  if (projective_dim < 0 || projective_dim > 8) throw AlgebraError("ambient dimension out of range");
  return {all.end() - (projective_dim + 1), all.end()};
}

template <class F>
PolyMatrix<F> random_linear_matrix(const RingPtr<F>& ring, int rows, int cols, Rng& rng) {
  PolyMatrix<F> M(ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.at(i, j) = random_form(ring, 1, rng);
  return M;
}

template <class F>
Ideal<F> f1_surface(const F& field, Rng& rng) {
  auto src = PolyRing<F>::make({"a", "b", "c"}, field);
  auto target = PolyRing<F>::make(ambient_names(8), field);
  std::vector<typename F::Elem> point(3);
  for (auto& c : point) c = random_element(field, rng);
  auto cubics = monomials_of_degree(3, 3);
  std::vector<typename F::Elem> values;
  for (const auto& m : cubics) values.push_back(Polynomial<F>::monomial(src, m, field.one()).evaluate(point));
  auto pivot = std::find_if(values.begin(), values.end(), [&](const auto& v) { return !field.is_zero(v); });
  if (pivot == values.end()) throw AlgebraError("base point is the origin");
  const std::size_t k = pivot - values.begin();
  const auto mk = Polynomial<F>::monomial(src, cubics[k], field.one());
  std::vector<Polynomial<F>> forms;
  for (std::size_t i = 0; i < cubics.size(); ++i) {
    if (i == k) continue;
    auto f = Polynomial<F>::monomial(src, cubics[i], field.one());
    forms.push_back(f - mk.scaled(field.div(values[i], values[k])));
  }
  return ideal_from_parametrization(forms, target);
}

template <class F>
Ideal<F> construct_surface_once(const SurfaceRecipe& recipe, const F& field) {
  Rng rng = Rng(recipe.seed).fork(static_cast<std::uint64_t>(recipe.kind));
  auto ring = PolyRing<F>::make(ambient_names(recipe.ambient_dim()), field);
  switch (recipe.kind) {
    case SurfaceKind::kD8: {
      auto A2 = random_linear_matrix(ring, 4, 4, rng);
      auto A1 = A2 + A2.transpose();
      return Ideal<F>(ring, minors(A1, 2));
    }
    case SurfaceKind::kD7: {
      auto A2 = random_linear_matrix(ring, 5, 5, rng);
      auto A1 = A2 + A2.transpose();
      auto A = A1.submatrix({1, 2, 3}, {0, 1, 2, 3});
      return Ideal<F>(ring, minors(A, 2));
    }
    case SurfaceKind::kD6:
      return Ideal<F>(ring, minors(random_linear_matrix(ring, 3, 3, rng), 2));
    case SurfaceKind::kF1:
      return f1_surface(field, rng);
  }
  throw AlgebraError("unknown surface kind");
}

namespace {

std::string describe(const DimensionDegree& dd) {
  return "dimension " + std::to_string(dd.dimension) + ", degree " + std::to_string(dd.degree);
}

template <class F>
DimensionDegree safe_dimension_degree(const Ideal<F>& I) {
  if (!I.is_zero() && I.is_unit()) return {-1, 0};
  return dimension_degree(I);
}

}  // namespace

template <class F>
Retried<Ideal<F>> construct_surface(const SurfaceRecipe& recipe, const F& field) {
  std::vector<Attempt> rejected;
  for (int k = 0; k < kMaxAttempts; ++k) {
    SurfaceRecipe r = recipe;
    r.seed = recipe.seed + k;
    auto I = construct_surface_once(r, field);
    auto dd = safe_dimension_degree(I);
    if (dd.dimension == 2 && dd.degree == recipe.degree()) return {std::move(I), r.seed, std::move(rejected)};
    rejected.push_back({r.seed, describe(dd)});
  }
  throw DegenerateError("degenerate construction of " + surface_name(recipe.kind) + " for " +
                     std::to_string(kMaxAttempts) + " seeds");
}

template <class F>
Ideal<F> project_generic(const Ideal<F>& I, int times, Seed seed) {
  if (times < 0 || times >= I.ring()->nvars()) throw AlgebraError("projection count out of range");
  if (times == 0) return I;
  auto J = generic_change_of_coordinates(I, seed);
  std::vector<int> vars(times);
  for (int i = 0; i < times; ++i) vars[i] = i;
  return eliminate(J, vars);
}

template <class F>
Ideal<F> project_from_point(const Ideal<F>& I, const std::vector<typename F::Elem>& point, Seed seed) {
  const auto& ring = I.ring();
  const F& K = ring->field();
  const int n = ring->nvars();
  if (static_cast<int>(point.size()) != n) throw AlgebraError("point has the wrong length");
  Rng rng(seed);
  CoordinateChange<F> cc;
  for (;;) {
    cc.matrix.assign(n, std::vector<typename F::Elem>(n, K.zero()));
    for (int i = 0; i < n; ++i) {
      cc.matrix[i][0] = point[i];
      for (int j = 1; j < n; ++j) cc.matrix[i][j] = random_element(K, rng);
    }
    if (!K.is_zero(dense_determinant(cc.matrix, K))) break;
    ++cc.redraws;
  }
  Ideal<F> J(ring, cc.apply(I.generators()));
  return eliminate(J, std::vector<int>{0});
}

template <class F>
Retried<Ideal<F>> project_surface(const ProjectionSpec& spec, const F& field) {
  if (spec.times < 1 || spec.times > 3) throw AlgebraError("projection count must be 1, 2 or 3");
  auto base = construct_surface(spec.recipe, field);
  std::vector<Attempt> rejected = base.rejected;
  for (int k = 0; k < kMaxAttempts; ++k) {
    const Seed s = spec.seed + k;
    auto P = project_generic(base.value, spec.times, s);
    auto dd = safe_dimension_degree(P);
    if (dd.dimension == 2 && dd.degree == spec.recipe.degree()) return {std::move(P), s, std::move(rejected)};
    rejected.push_back({s, "projection: " + describe(dd)});
  }
  throw DegenerateError("degenerate projection for " + std::to_string(kMaxAttempts) + " seeds");
}

namespace {

template <class F>
using Mat = std::vector<std::vector<typename F::Elem>>;

template <class F>
std::vector<Monomial> standard_monomials(int nvars, int d, const std::vector<Monomial>& leads) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool standard = true;
    for (const auto& l : leads)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

/// Matrix of multiplication by lb/la on (R/Z)_D, for a zero-dimensional
/// saturated Z of degree N and D past the regularity. Empty when la is a
/// zero divisor or the pieces do not have dimension N.
template <class F>
std::optional<Mat<F>> multiplication_matrix(const Ideal<F>& Z, std::int64_t N, const Polynomial<F>& la,
                                            const Polynomial<F>& lb) {
  const auto& G = Z.groebner(MonomialOrder::degrevlex());
  const auto& ring = G.ring();
  const F& K = ring->field();
  const int n = ring->nvars();
  const auto leads = G.leading_monomials();
  std::vector<Monomial> bd, bd1;
  int D = std::max(G.max_degree(), 1);
  for (int tries = 0;; ++tries, ++D) {
    if (tries > 6) return std::nullopt;
    bd = standard_monomials<F>(n, D, leads);
    bd1 = standard_monomials<F>(n, D + 1, leads);
    if (static_cast<std::int64_t>(bd.size()) == N && static_cast<std::int64_t>(bd1.size()) == N) break;
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < bd1.size(); ++i) index.emplace(bd1[i], i);
  const std::size_t sz = bd.size();
  // Augmented [A | B] with columns indexed by the basis of degree D.
  Mat<F> aug(sz, std::vector<typename F::Elem>(2 * sz, K.zero()));
  const auto a = la.in_ring(ring), b = lb.in_ring(ring);
  for (std::size_t k = 0; k < sz; ++k) {
    for (int side = 0; side < 2; ++side) {
      auto nf = G.normal_form((side ? b : a).times_monomial(bd[k], K.one()));
      for (const auto& t : nf.terms()) aug[index.at(t.mono)][side * sz + k] = t.coeff;
    }
  }
  for (std::size_t c = 0; c < sz; ++c) {
    std::size_t piv = c;
    while (piv < sz && K.is_zero(aug[piv][c])) ++piv;
    if (piv == sz) return std::nullopt;
    std::swap(aug[piv], aug[c]);
    const auto inv = K.inv(aug[c][c]);
    for (auto& x : aug[c]) x = K.mul(x, inv);
    for (std::size_t r = 0; r < sz; ++r) {
      if (r == c || K.is_zero(aug[r][c])) continue;
      const auto f = aug[r][c];
      for (std::size_t j = c; j < 2 * sz; ++j) aug[r][j] = K.sub(aug[r][j], K.mul(f, aug[c][j]));
    }
  }
  Mat<F> X(sz, std::vector<typename F::Elem>(sz));
  for (std::size_t r = 0; r < sz; ++r)
    for (std::size_t j = 0; j < sz; ++j) X[r][j] = aug[r][sz + j];
  return X;
}

UPoly<PrimeField> mulmod(const PrimeField& K, const UPoly<PrimeField>& a, const UPoly<PrimeField>& b,
                         const UPoly<PrimeField>& m) {
  if (a.empty() || b.empty()) return {};
  UPoly<PrimeField> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  utrim(K, r);
  return uremainder(K, std::move(r), m);
}

UPoly<PrimeField> powmod(const PrimeField& K, UPoly<PrimeField> base, std::uint64_t e, const UPoly<PrimeField>& m) {
  UPoly<PrimeField> r = uremainder(K, {1}, m);
  base = uremainder(K, std::move(base), m);
  while (e) {
    if (e & 1) r = mulmod(K, r, base, m);
    e >>= 1;
    if (e) base = mulmod(K, base, base, m);
  }
  return r;
}

void split_roots(const PrimeField& K, const UPoly<PrimeField>& g, std::vector<PrimeField::Elem>& out,
                 PrimeField::Elem a) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(K.neg(K.div(g[0], g[1])));
    return;
  }
  for (;; a = K.add(a, 1)) {
    UPoly<PrimeField> s = powmod(K, {a, 1}, (K.characteristic() - 1) / 2, g);
    UPoly<PrimeField> minus = s, plus = s;
    if (minus.empty()) minus.push_back(0);
    if (plus.empty()) plus.push_back(0);
    minus[0] = K.sub(minus[0], 1);
    plus[0] = K.add(plus[0], 1);
    utrim(K, minus);
    utrim(K, plus);
    auto g1 = ugcd(K, g, minus);
    auto g2 = ugcd(K, g, plus);
    auto g3 = ugcd(K, g, UPoly<PrimeField>{a, 1});
    if (g1.size() == g.size() || g2.size() == g.size()) continue;
    split_roots(K, g1, out, K.add(a, 1));
    split_roots(K, g2, out, K.add(a, 1));
    split_roots(K, g3, out, K.add(a, 1));
    return;
  }
}

/// Distinct roots in F_p.
std::vector<PrimeField::Elem> prime_field_roots(const PrimeField& K, UPoly<PrimeField> f) {
  utrim(K, f);
  if (f.size() <= 1) return {};
  auto xp = powmod(K, {0, 1}, K.characteristic(), f);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = K.sub(xp[1], 1);
  utrim(K, xp);
  auto g = ugcd(K, f, xp);
  std::vector<PrimeField::Elem> out;
  split_roots(K, g, out, 0);
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, Rng& rng) {
  return random_form(ring, 1, rng);
}

}  // namespace

std::optional<std::vector<PrimeField::Elem>> find_rational_point(const Ideal<PrimeField>& I, Rng& rng) {
  const auto& ring = I.ring();
  const PrimeField& K = ring->field();
  const int n = ring->nvars();
  const auto dd = safe_dimension_degree(I);
  if (dd.dimension < 0) return std::nullopt;
  SaturationOptions quick;
  quick.compute_exponent = false;
  for (int attempt = 0; attempt < 40; ++attempt) {
    auto gens = I.generators();
    for (int k = 0; k < dd.dimension; ++k) gens.push_back(random_linear_form(ring, rng));
    quick.seed = rng.next();
    auto Z = saturate_irrelevant(Ideal<PrimeField>(ring, gens), quick).ideal;
    auto zd = safe_dimension_degree(Z);
    if (zd.dimension != 0) continue;
    auto la = random_linear_form(ring, rng), lb = random_linear_form(ring, rng);
    auto X = multiplication_matrix(Z, zd.degree, la, lb);
    if (!X) continue;
    auto chi = characteristic_polynomial(K, *X);
    auto dchi = uderivative(K, chi);
    for (auto r : prime_field_roots(K, chi)) {
      if (K.is_zero(uevaluate(K, dchi, r))) continue;
      auto pg = Z.generators();
      pg.push_back(lb - la.scaled(r));
      auto P = saturate_irrelevant(Ideal<PrimeField>(ring, pg), quick).ideal;
      auto pd = safe_dimension_degree(P);
      if (pd.dimension != 0 || pd.degree != 1) continue;
      const auto& G = P.groebner(MonomialOrder::degrevlex());
      std::vector<bool> is_lead(n, false);
      for (const auto& g : G.elements())
        if (g.degree() == 1)
          for (int i = 0; i < n; ++i)
            if (g.leading_monomial().exp[i]) is_lead[i] = true;
      int free = -1;
      for (int i = 0; i < n; ++i)
        if (!is_lead[i]) free = i;
      std::vector<PrimeField::Elem> point(n, 0);
      point[free] = 1;
      for (const auto& g : G.elements()) {
        if (g.degree() != 1) continue;
        int lead = -1;
        for (int i = 0; i < n; ++i)
          if (g.leading_monomial().exp[i]) lead = i;
        point[lead] = K.neg(g.coefficient(ring->variable(free)));
      }
      bool on = true;
      for (const auto& f : I.generators())
        if (!K.is_zero(f.evaluate(point))) on = false;
      if (on) return point;
    }
  }
  return std::nullopt;
}

Retried<Ideal<PrimeField>> trisecant_plane_projection(const SurfaceRecipe& recipe, const PrimeField& field) {
  auto base = construct_surface(recipe, field);
  std::vector<Attempt> rejected = base.rejected;
  const int n = base.value.ring()->nvars();
  for (int k = 0; k < kMaxAttempts; ++k) {
    const Seed s = recipe.seed + k;
    Rng rng = Rng(s).fork(0x5ec3);
    std::vector<std::vector<PrimeField::Elem>> pts;
    for (int i = 0; i < 3; ++i) {
      auto p = find_rational_point(base.value, rng);
      if (!p) break;
      pts.push_back(*p);
    }
    if (pts.size() < 3) {
      rejected.push_back({s, "no rational points found"});
      continue;
    }
    std::vector<PrimeField::Elem> center(n, 0);
    for (const auto& p : pts) {
      const auto c = random_nonzero_element(field, rng);
      for (int i = 0; i < n; ++i) center[i] = field.add(center[i], field.mul(c, p[i]));
    }
    auto P = project_from_point(base.value, center, s);
    auto dd = safe_dimension_degree(P);
    if (dd.dimension == 2 && dd.degree == recipe.degree()) return {std::move(P), s, std::move(rejected)};
    rejected.push_back({s, "projection: " + describe(dd)});
  }
  throw DegenerateError("degenerate trisecant-plane projection for " + std::to_string(kMaxAttempts) + " seeds");
}

template <class F>
ResidualReport<F> multisecant_residual(const Ideal<F>& I, int d) {
  ResidualReport<F> rep;
  rep.input = I;
  rep.cut_degree = d;
  rep.cut = I.truncated(d);
  if (rep.cut.is_zero()) throw AlgebraError("no generators in degree <= " + std::to_string(d));
  auto sat = saturate(rep.cut, I);
  rep.residual = sat.ideal;
  rep.saturation_exponent = sat.exponent;
  rep.residual_dd = safe_dimension_degree(rep.residual);
  if (rep.residual_dd.dimension >= 0)
    rep.residual_hilbert_polynomial = hilbert_series(rep.residual).hilbert_polynomial_coefficients();
  SaturationOptions quick;
  quick.compute_exponent = false;
  auto lhs = saturate_irrelevant(rep.cut, quick).ideal;
  auto rhs = saturate_irrelevant(intersect(I, rep.residual), quick).ideal;
  rep.scheme_equality = lhs.same_ideal(rhs);
  return rep;
}

template <class F>
std::vector<Polynomial<F>> random_complete_intersection(const Ideal<F>& I, const std::vector<int>& multidegree,
                                                        Seed seed) {
  if (multidegree.empty()) throw AlgebraError("empty multidegree");
  Rng rng = Rng(seed).fork(0xc1);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.groebner(MonomialOrder::degrevlex()).elements()) gens.push_back(g.in_ring(I.ring()));
  std::vector<Polynomial<F>> ci;
  for (int d : multidegree) {
    if (graded_piece_dimension(I, d) <= 0)
      throw AlgebraError("the ideal has no members of degree " + std::to_string(d));
    ci.push_back(random_ideal_member(gens, d, rng));
  }
  return ci;
}

template <class F>
bool certify_reduced_points(const Ideal<F>& points, Seed seed, int attempts) {
  const auto dd = safe_dimension_degree(points);
  if (dd.dimension != 0) return false;
  const F& K = points.ring()->field();
  Rng rng = Rng(seed).fork(0x7ed);
  for (int a = 0; a < attempts; ++a) {
    auto la = random_linear_form(points.ring(), rng), lb = random_linear_form(points.ring(), rng);
    auto X = multiplication_matrix(points, dd.degree, la, lb);
    if (!X) continue;
    auto chi = characteristic_polynomial(K, *X);
    if (udegree<F>(chi) == dd.degree && usquarefree(K, chi)) return true;
  }
  return false;
}

template <class F>
NodeReport<F> singular_scheme_of_ci(const Ideal<F>& I, const std::vector<int>& multidegree, Seed seed) {
  NodeReport<F> rep;
  rep.multidegree = multidegree;
  rep.seed = seed;
  rep.ci = random_complete_intersection(I, multidegree, seed);
  rep.ci_dd = safe_dimension_degree(Ideal<F>(I.ring(), rep.ci));
  SaturationOptions quick;
  quick.compute_exponent = false;
  quick.seed = splitmix64(seed);
  rep.singular = saturate_irrelevant(jacobian_ideal(rep.ci, static_cast<int>(multidegree.size())), quick).ideal;
  rep.singular_dd = safe_dimension_degree(rep.singular);
  rep.nodes_on_surface = rep.singular.contains(I);
  rep.reduced = rep.singular_dd.dimension == 0 && certify_reduced_points(rep.singular, seed);
  return rep;
}

namespace {

template <class F>
std::string ci_defect(const NodeReport<F>& rep, int ambient_dim) {
  std::int64_t prod = 1;
  for (int d : rep.multidegree) prod *= d;
  const int expected = ambient_dim - static_cast<int>(rep.multidegree.size());
  if (rep.ci_dd.dimension != expected || rep.ci_dd.degree != prod)
    return "complete intersection has " + describe(rep.ci_dd);
  return {};
}

}  // namespace

template <class F>
Retried<NodeReport<F>> count_nodes(const Ideal<F>& I, const std::vector<int>& multidegree, Seed seed) {
  std::vector<Attempt> rejected;
  const int ambient = I.ring()->nvars() - 1;
  for (int k = 0; k < kMaxAttempts; ++k) {
    const Seed s = seed + k;
    auto rep = singular_scheme_of_ci(I, multidegree, s);
    std::string why = ci_defect(rep, ambient);
    if (why.empty() && rep.singular_dd.dimension > 0) why = "singular scheme has " + describe(rep.singular_dd);
    if (why.empty()) return {std::move(rep), s, std::move(rejected)};
    rejected.push_back({s, why});
  }
  throw DegenerateError("degenerate complete intersections for " + std::to_string(kMaxAttempts) + " seeds");
}

template <class F>
bool check_smooth_ci(const Ideal<F>& I, const std::vector<int>& multidegree, Seed seed) {
  const int ambient = I.ring()->nvars() - 1;
  for (int k = 0; k < kMaxAttempts; ++k) {
    auto rep = singular_scheme_of_ci(I, multidegree, seed + k);
    if (ci_defect(rep, ambient).empty()) return rep.singular.is_unit();
  }
  throw DegenerateError("degenerate complete intersections for " + std::to_string(kMaxAttempts) + " seeds");
}

template <class F>
LinkReport<F> linked_surface(const Ideal<F>& I, const std::vector<int>& ci_degrees, Seed seed) {
  LinkReport<F> rep;
  rep.ci = random_complete_intersection(I, ci_degrees, seed);
  rep.ci_ideal = Ideal<F>(I.ring(), rep.ci);
  rep.ci_dd = safe_dimension_degree(rep.ci_ideal);
  rep.linked = ideal_quotient(rep.ci_ideal, I);
  rep.linked_dd = safe_dimension_degree(rep.linked);
  return rep;
}

std::vector<std::string> named_surfaces() {
  return {"D6", "D7", "D8", "F1", "D6~", "D7~", "D8~", "F1~", "D8~~", "K_P", "L_P", "D8-sec3", "S_P0"};
}

template <class F>
Retried<Ideal<F>> named_surface(std::string_view name, Seed seed, const F& field) {
  auto recipe = [&](SurfaceKind k) { return SurfaceRecipe{k, seed}; };
  auto projected = [&](SurfaceKind k, int times) {
    return project_surface(ProjectionSpec{recipe(k), times, seed}, field);
  };
  if (name == "D6" || name == "D7" || name == "D8" || name == "F1")
    return construct_surface(recipe(parse_surface_kind(name)), field);
  if (name == "D6~") return projected(SurfaceKind::kD6, 1);
  if (name == "D7~") return projected(SurfaceKind::kD7, 1);
  if (name == "D8~") return projected(SurfaceKind::kD8, 1);
  if (name == "F1~") return projected(SurfaceKind::kF1, 1);
  if (name == "D8~~") return projected(SurfaceKind::kD8, 2);
  if (name == "K_P") return projected(SurfaceKind::kD7, 2);
  if (name == "L_P") return projected(SurfaceKind::kD8, 3);
  if (name == "S_P0") {
    auto L = projected(SurfaceKind::kD8, 3);
    SaturationOptions quick;
    quick.compute_exponent = false;
    L.value = saturate_irrelevant(L.value.truncated(3), quick).ideal;
    return L;
  }
  if (name == "D8-sec3") {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return trisecant_plane_projection(recipe(SurfaceKind::kD8), field);
    } else {
      throw AlgebraError("D8-sec3 needs a prime field");
    }
  }
  throw AlgebraError("unknown surface '" + std::string(name) + "'");
}

#define DPCY_INSTANTIATE(F)                                                                                \
  template PolyMatrix<F> random_linear_matrix(const RingPtr<F>&, int, int, Rng&);                          \
  template Ideal<F> f1_surface(const F&, Rng&);                                                            \
  template Ideal<F> construct_surface_once(const SurfaceRecipe&, const F&);                                \
  template Retried<Ideal<F>> construct_surface(const SurfaceRecipe&, const F&);                            \
  template Ideal<F> project_generic(const Ideal<F>&, int, Seed);                                           \
  template Ideal<F> project_from_point(const Ideal<F>&, const std::vector<typename F::Elem>&, Seed);       \
  template Retried<Ideal<F>> project_surface(const ProjectionSpec&, const F&);                             \
  template ResidualReport<F> multisecant_residual(const Ideal<F>&, int);                                   \
  template std::vector<Polynomial<F>> random_complete_intersection(const Ideal<F>&, const std::vector<int>&, \
                                                                   Seed);                                  \
  template bool certify_reduced_points(const Ideal<F>&, Seed, int);                                        \
  template NodeReport<F> singular_scheme_of_ci(const Ideal<F>&, const std::vector<int>&, Seed);            \
  template Retried<NodeReport<F>> count_nodes(const Ideal<F>&, const std::vector<int>&, Seed);             \
  template bool check_smooth_ci(const Ideal<F>&, const std::vector<int>&, Seed);                           \
  template LinkReport<F> linked_surface(const Ideal<F>&, const std::vector<int>&, Seed);                   \
  template Retried<Ideal<F>> named_surface(std::string_view, Seed, const F&);

DPCY_INSTANTIATE(PrimeField)
DPCY_INSTANTIATE(RationalField)

}  // namespace dpcy
