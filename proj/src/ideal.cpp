#include "dpcy/ideal.hpp"

#include <algorithm>
#include <optional>

#include "dpcy/linalg.hpp"
#include "dpcy/matrix.hpp"

namespace dpcy {

namespace {

/// Moves p into `target`, sending variable i to new_index[i] (which must be
/// non-negative whenever p uses variable i).
template <class F>
Polynomial<F> transfer(const Polynomial<F>& p, const RingPtr<F>& target,
                       const std::vector<int>& new_index) {
  std::vector<Term<F>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    m.degree = t.mono.degree;
    for (std::size_t i = 0; i < new_index.size(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (new_index[i] < 0) throw AlgebraError("transfer: variable has no image");
      m.exp[new_index[i]] = t.mono.exp[i];
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

template <class F>
void check_same_ring(const Ideal<F>& I, const Ideal<F>& J) {
  if (!I.ring()->same_variables(*J.ring())) throw AlgebraError("ring mismatch");
}

std::string fresh_name(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += '_';
  return base;
}

template <class F>
Ideal<F> quotient_by_element(const Ideal<F>& I, const Polynomial<F>& g) {
  auto both = intersect(I, Ideal<F>(I.ring(), {g}));
  std::vector<Polynomial<F>> out;
  for (const auto& h : both.groebner().elements()) {
    std::vector<Polynomial<F>> q;
    auto r = divide(h.in_ring(I.ring()), {g}, &q);
    if (!r.is_zero()) throw AlgebraError("inexact division in ideal quotient");
    out.push_back(q[0]);
  }
  return Ideal<F>(I.ring(), std::move(out));
}

bool is_variable(const Monomial& m) { return m.degree == 1; }

}  // namespace

// ---------------------------------------------------------------- Ideal

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring().get() != ring_.get()) {
      if (!g.ring()->same_variables(*ring_)) throw AlgebraError("ring mismatch");
      gens_.push_back(g.in_ring(ring_));
    } else {
      gens_.push_back(std::move(g));
    }
  }
}

template <class F>
Ideal<F> Ideal<F>::unit(const RingPtr<F>& ring) {
  return Ideal(ring, {Polynomial<F>::constant(ring, ring->field().one())});
}

template <class F>
Ideal<F> Ideal<F>::irrelevant(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial<F>::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

template <class F>
bool Ideal<F>::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [o, G] : cache_->bases)
    if (o == order) return *G;
  std::shared_ptr<const GroebnerBasis<F>> G;
  if (gens_.empty())
    G = std::make_shared<GroebnerBasis<F>>(ring_->with_order(order), std::vector<Polynomial<F>>{}, true);
  else
    G = std::make_shared<GroebnerBasis<F>>(reduced_groebner_basis(gens_, order));
  cache_->bases.emplace_back(order, G);
  return *G;
}

template <class F>
void Ideal<F>::adopt_groebner(GroebnerBasis<F> G) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& entry : cache_->bases)
    if (entry.first == G.order()) return;
  auto order = G.order();
  cache_->bases.emplace_back(order, std::make_shared<GroebnerBasis<F>>(std::move(G)));
}

template <class F>
bool Ideal<F>::is_unit() const {
  return groebner().is_unit();
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return groebner().contains(f);
}

template <class F>
bool Ideal<F>::contains(const Ideal& J) const {
  check_same_ring(*this, J);
  return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const auto& g) { return contains(g); });
}

template <class F>
bool Ideal<F>::same_ideal(const Ideal& J) const {
  return contains(J) && J.contains(*this);
}

template <class F>
Ideal<F> Ideal<F>::operator+(const Ideal& J) const {
  check_same_ring(*this, J);
  auto gens = gens_;
  for (const auto& g : J.gens_) gens.push_back(g.in_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

template <class F>
Ideal<F> Ideal<F>::truncated(int d) const {
  if (!is_homogeneous()) throw AlgebraError("truncation requires a homogeneous ideal");
  std::vector<Polynomial<F>> out;
  for (const auto& g : groebner(MonomialOrder::degrevlex()).elements())
    if (g.weighted_degree() <= d) out.push_back(g.in_ring(ring_));
  return Ideal(ring_, std::move(out));
}

// ---------------------------------------------------------------- elimination

template <class F>
RingPtr<F> ring_without(const RingPtr<F>& ring, const std::vector<int>& vars) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (std::find(vars.begin(), vars.end(), i) != vars.end()) continue;
    names.push_back(ring->name(i));
    weights.push_back(ring->weights()[i]);
  }
  return PolyRing<F>::make(std::move(names), ring->field(), MonomialOrder::degrevlex(),
                           std::move(weights));
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<int>& vars_in) {
  const auto& ring = I.ring();
  const int n = ring->nvars();
  std::vector<int> vars = vars_in;
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw AlgebraError("eliminate: repeated variable");
  for (int v : vars)
    if (v < 0 || v >= n) throw AlgebraError("eliminate: variable index out of range");
  if (vars.empty()) return I;
  if (static_cast<int>(vars.size()) == n) throw AlgebraError("eliminate: no variables would remain");

  std::vector<int> perm = vars;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(vars.begin(), vars.end(), i)) perm.push_back(i);
  std::vector<std::string> names;
  std::vector<int> weights, to_block(n);
  for (int a = 0; a < n; ++a) {
    names.push_back(ring->name(perm[a]));
    weights.push_back(ring->weights()[perm[a]]);
    to_block[perm[a]] = a;
  }
  const int k = static_cast<int>(vars.size());
  auto block = PolyRing<F>::make(names, ring->field(), MonomialOrder::block(k), weights);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(transfer(g, block, to_block));

  auto sub = ring_without(ring, vars);
  if (gens.empty()) return Ideal<F>(sub, {});
  auto G = reduced_groebner_basis(gens, block->order());
  std::vector<int> to_sub(n, -1);
  for (int a = k; a < n; ++a) to_sub[a] = a - k;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : G.elements()) {
    const auto& lm = g.leading_monomial();
    bool free = true;
    for (int a = 0; a < k; ++a)
      if (lm.exp[a]) free = false;
    if (free) kept.push_back(transfer(g, sub, to_sub));
  }
  Ideal<F> out(sub, kept);
  out.adopt_groebner(GroebnerBasis<F>(sub, std::move(kept), true));
  return out;
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& s : names) {
    int i = I.ring()->index_of(s);
    if (i < 0) throw AlgebraError("unknown variable '" + s + "'");
    idx.push_back(i);
  }
  return eliminate(I, idx);
}

// ---------------------------------------------------------------- intersection / quotient

template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
  check_same_ring(I, J);
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal<F>(ring, {});
  const int n = ring->nvars();
  if (n + 1 > static_cast<int>(kMaxVars)) throw AlgebraError("intersect: too many variables");

  std::vector<std::string> names{fresh_name(ring->names(), "t")};
  for (const auto& s : ring->names()) names.push_back(s);
  std::vector<int> weights{0};
  for (int w : ring->weights()) weights.push_back(w);
  auto big = PolyRing<F>::make(names, ring->field(), MonomialOrder::block(1), weights);
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = i + 1;

  const F& K = ring->field();
  auto t = Polynomial<F>::variable(big, 0);
  auto one_minus_t = Polynomial<F>::constant(big, K.one()) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * transfer(f, big, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * transfer(g, big, shift));
  auto G = reduced_groebner_basis(gens, big->order());

  std::vector<int> back(n + 1, -1);
  for (int i = 0; i < n; ++i) back[i + 1] = i;
  auto target = ring->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> kept;
  for (const auto& g : G.elements())
    if (g.leading_monomial().exp[0] == 0) kept.push_back(transfer(g, target, back));
  Ideal<F> out(ring, kept);
  out.adopt_groebner(GroebnerBasis<F>(target, std::move(kept), true));
  return out;
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J) {
  check_same_ring(I, J);
  if (J.is_zero()) return Ideal<F>::unit(I.ring());
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.generators()) {
    if (I.contains(g)) continue;
    auto q = quotient_by_element(I, g.in_ring(I.ring()));
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal<F>::unit(I.ring());
  return *acc;
}

// ---------------------------------------------------------------- saturation

template <class F>
Saturation<F> iterated_saturation(const Ideal<F>& I, const Ideal<F>& J) {
  Ideal<F> cur = I;
  int k = 0;
  for (;;) {
    auto next = ideal_quotient(cur, J);
    if (cur.contains(next)) break;
    cur = next;
    if (++k > 255) throw AlgebraError("saturation does not stabilize");
  }
  return {cur, k};
}

template <class F>
int saturation_exponent(const Ideal<F>& I, const Ideal<F>& S, const Ideal<F>& J) {
  check_same_ring(I, S);
  check_same_ring(I, J);
  auto nf = [&](const Polynomial<F>& f) {
    return I.is_zero() ? f : I.groebner().normal_form(f).in_ring(I.ring());
  };
  std::vector<Polynomial<F>> cur;
  for (const auto& s : S.generators()) cur.push_back(nf(s));
  cur = echelon_basis(cur);
  int k = 0;
  while (!cur.empty()) {
    if (++k > 255) throw AlgebraError("saturation exponent does not stabilize");
    std::vector<Polynomial<F>> next;
    for (const auto& f : cur)
      for (const auto& g : J.generators()) next.push_back(nf(f * g.in_ring(I.ring())));
    cur = echelon_basis(next);
  }
  return k;
}

template <class F>
Saturation<F> saturate_irrelevant(const Ideal<F>& I, const SaturationOptions& opts) {
  const auto& ring = I.ring();
  if (I.is_zero()) return {I, 0};
  if (!I.is_homogeneous()) return iterated_saturation(I, Ideal<F>::irrelevant(ring));
  const int n = ring->nvars();
  const F& K = ring->field();
  Rng rng(opts.seed);
  std::vector<typename F::Elem> c(n);
  for (int i = 0; i < n - 1; ++i) c[i] = random_element(K, rng);
  c[n - 1] = random_nonzero_element(K, rng);

  auto dr = ring->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> fwd, bwd;
  auto last = Polynomial<F>::variable(dr, n - 1);
  Polynomial<F> rest(dr);
  for (int i = 0; i < n - 1; ++i) {
    fwd.push_back(Polynomial<F>::variable(dr, i));
    bwd.push_back(Polynomial<F>::variable(ring, i));
    rest += Polynomial<F>::variable(dr, i).scaled(c[i]);
  }
  fwd.push_back((last - rest).scaled(K.inv(c[n - 1])));
  Polynomial<F> ell(ring);
  for (int i = 0; i < n; ++i) ell += Polynomial<F>::variable(ring, i).scaled(c[i]);
  bwd.push_back(ell);

  std::vector<Polynomial<F>> moved;
  for (const auto& g : I.generators()) moved.push_back(g.substitute(fwd, dr));
  auto G = reduced_groebner_basis(moved, MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> out;
  for (const auto& g : G.elements()) {
    int e = 255;
    for (const auto& t : g.terms()) e = std::min<int>(e, t.mono.exp[n - 1]);
    auto terms = g.terms();
    for (auto& t : terms) {
      t.mono.exp[n - 1] = static_cast<std::uint8_t>(t.mono.exp[n - 1] - e);
      t.mono.degree = static_cast<std::uint16_t>(t.mono.degree - e);
    }
    auto h = Polynomial<F>::from_sorted(G.ring(), std::move(terms));
    out.push_back(h.substitute(bwd, ring));
  }
  Saturation<F> s{Ideal<F>(ring, std::move(out)), -1};
  if (opts.compute_exponent) s.exponent = saturation_exponent(I, s.ideal, Ideal<F>::irrelevant(ring));
  return s;
}

template <class F>
Saturation<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const SaturationOptions& opts) {
  check_same_ring(I, J);
  const auto& ring = I.ring();
  bool irrelevant = !J.is_zero();
  if (irrelevant) {
    std::vector<char> seen(ring->nvars(), 0);
    for (const auto& g : J.generators())
      if (g.size() == 1 && is_variable(g.leading_monomial()))
        for (int i = 0; i < ring->nvars(); ++i)
          if (g.leading_monomial().exp[i]) seen[i] = 1;
    irrelevant = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }
  if (irrelevant && I.is_homogeneous()) return saturate_irrelevant(I, opts);

  return iterated_saturation(I, J);
}

// ---------------------------------------------------------------- Jacobian

template <class F>
Ideal<F> jacobian_ideal(const std::vector<Polynomial<F>>& polys, int codim) {
  if (polys.empty()) throw AlgebraError("jacobian_ideal of an empty list");
  const auto& ring = polys.front().ring();
  PolyMatrix<F> M(ring, static_cast<int>(polys.size()), ring->nvars());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (int j = 0; j < ring->nvars(); ++j) M.at(static_cast<int>(i), j) = polys[i].derivative(j);
  auto gens = polys;
  for (auto& m : minors(M, codim))
    if (!m.is_zero()) gens.push_back(std::move(m));
  return Ideal<F>(ring, std::move(gens));
}

// ---------------------------------------------------------------- coordinate changes

template <class F>
typename F::Elem dense_determinant(std::vector<std::vector<typename F::Elem>> M, const F& K) {
  const std::size_t n = M.size();
  auto det = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && K.is_zero(M[piv][c])) ++piv;
    if (piv == n) return K.zero();
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = K.neg(det);
    }
    det = K.mul(det, M[c][c]);
    auto inv = K.inv(M[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (K.is_zero(M[r][c])) continue;
      auto f = K.mul(M[r][c], inv);
      for (std::size_t k = c; k < n; ++k) M[r][k] = K.sub(M[r][k], K.mul(f, M[c][k]));
    }
  }
  return det;
}

template <class F>
Polynomial<F> CoordinateChange<F>::apply(const Polynomial<F>& f) const {
  const auto& ring = f.ring();
  std::vector<Polynomial<F>> images;
  for (const auto& row : matrix) {
    Polynomial<F> img(ring);
    for (std::size_t j = 0; j < row.size(); ++j)
      img += Polynomial<F>::variable(ring, static_cast<int>(j)).scaled(row[j]);
    images.push_back(std::move(img));
  }
  return f.substitute(images, ring);
}

template <class F>
std::vector<Polynomial<F>> CoordinateChange<F>::apply(const std::vector<Polynomial<F>>& fs) const {
  std::vector<Polynomial<F>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply(f));
  return out;
}

template <class F>
CoordinateChange<F> CoordinateChange<F>::inverse(const F& K) const {
  const std::size_t n = matrix.size();
  auto A = matrix;
  std::vector<std::vector<typename F::Elem>> B(n, std::vector<typename F::Elem>(n, K.zero()));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && K.is_zero(A[piv][c])) ++piv;
    if (piv == n) throw AlgebraError("singular coordinate change");
    std::swap(A[piv], A[c]);
    std::swap(B[piv], B[c]);
    auto inv = K.inv(A[c][c]);
    for (std::size_t k = 0; k < n; ++k) {
      A[c][k] = K.mul(A[c][k], inv);
      B[c][k] = K.mul(B[c][k], inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || K.is_zero(A[r][c])) continue;
      auto f = A[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        A[r][k] = K.sub(A[r][k], K.mul(f, A[c][k]));
        B[r][k] = K.sub(B[r][k], K.mul(f, B[c][k]));
      }
    }
  }
  return {std::move(B), 0};
}

template <class F>
CoordinateChange<F> random_coordinate_change(const RingPtr<F>& ring, Seed seed) {
  const int n = ring->nvars();
  const F& K = ring->field();
  Rng rng(seed);
  CoordinateChange<F> cc;
  for (;;) {
    cc.matrix.assign(n, std::vector<typename F::Elem>(n, K.zero()));
    for (auto& row : cc.matrix)
      for (auto& e : row) e = random_element(K, rng);
    if (!K.is_zero(dense_determinant(cc.matrix, K))) return cc;
    ++cc.redraws;
  }
}

template <class F>
Ideal<F> generic_change_of_coordinates(const Ideal<F>& I, Seed seed, CoordinateChange<F>* used) {
  auto cc = random_coordinate_change(I.ring(), seed);
  Ideal<F> out(I.ring(), cc.apply(I.generators()));
  if (used) *used = std::move(cc);
  return out;
}

// ---------------------------------------------------------------- parametrization

template <class F>
Ideal<F> ideal_from_parametrization(const std::vector<Polynomial<F>>& forms, const RingPtr<F>& target) {
  if (forms.empty()) throw AlgebraError("no forms");
  const auto& src = forms.front().ring();
  int e = -1;
  for (const auto& f : forms) {
    f.check_ring(forms.front());
    if (f.is_zero() || !f.is_homogeneous()) throw AlgebraError("forms must be nonzero and homogeneous");
    if (e >= 0 && f.degree() != e) throw AlgebraError("forms of unequal degree");
    e = f.degree();
  }
  if (static_cast<int>(forms.size()) != target->nvars())
    throw AlgebraError("number of forms must match the target variables");
  const int ns = src->nvars(), nt = target->nvars();
  if (ns + nt > static_cast<int>(kMaxVars)) throw AlgebraError("too many variables");
  std::vector<std::string> names = src->names();
  for (const auto& s : target->names()) {
    if (std::find(names.begin(), names.end(), s) != names.end())
      throw AlgebraError("source and target share variable name '" + s + "'");
    names.push_back(s);
  }
  std::vector<int> weights(ns, 1);
  weights.insert(weights.end(), nt, e);
  auto graph = PolyRing<F>::make(names, src->field(), MonomialOrder::block(ns), weights);
  std::vector<int> embed_src(ns);
  for (int i = 0; i < ns; ++i) embed_src[i] = i;
  std::vector<Polynomial<F>> gens;
  for (int j = 0; j < nt; ++j)
    gens.push_back(Polynomial<F>::variable(graph, ns + j) - transfer(forms[j], graph, embed_src));
  auto G = reduced_groebner_basis(gens, graph->order());

  auto tgt = target->with_order(MonomialOrder::degrevlex());
  std::vector<int> back(ns + nt, -1);
  for (int j = 0; j < nt; ++j) back[ns + j] = j;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : G.elements()) {
    bool free = true;
    for (int i = 0; i < ns; ++i)
      if (g.leading_monomial().exp[i]) free = false;
    if (free) kept.push_back(transfer(g, tgt, back));
  }
  Ideal<F> out(target, kept);
  return out;
}

#define DPCY_INSTANTIATE(F)                                                                       \
  template class Ideal<F>;                                                                        \
  template RingPtr<F> ring_without(const RingPtr<F>&, const std::vector<int>&);                   \
  template Ideal<F> eliminate(const Ideal<F>&, const std::vector<int>&);                          \
  template Ideal<F> eliminate(const Ideal<F>&, const std::vector<std::string>&);                  \
  template Ideal<F> intersect(const Ideal<F>&, const Ideal<F>&);                                  \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Ideal<F>&);                             \
  template Saturation<F> saturate(const Ideal<F>&, const Ideal<F>&, const SaturationOptions&);    \
  template Saturation<F> saturate_irrelevant(const Ideal<F>&, const SaturationOptions&);          \
  template int saturation_exponent(const Ideal<F>&, const Ideal<F>&, const Ideal<F>&);            \
  template Ideal<F> jacobian_ideal(const std::vector<Polynomial<F>>&, int);                       \
  template struct CoordinateChange<F>;                                                            \
  template CoordinateChange<F> random_coordinate_change(const RingPtr<F>&, Seed);                 \
  template Ideal<F> generic_change_of_coordinates(const Ideal<F>&, Seed, CoordinateChange<F>*);   \
  template Ideal<F> ideal_from_parametrization(const std::vector<Polynomial<F>>&,                 \
                                               const RingPtr<F>&);                                \
  template typename F::Elem dense_determinant(std::vector<std::vector<typename F::Elem>>, const F&);

DPCY_INSTANTIATE(PrimeField)
DPCY_INSTANTIATE(RationalField)

}  // namespace dpcy
