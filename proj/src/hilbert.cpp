#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>

#include "dpcy/invariants.hpp"

namespace dpcy {

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly add(IntPoly a, const IntPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IntPoly one_minus_t_pow(int e) {
  IntPoly r(e + 1, 0);
  r[0] = 1;
  r[e] -= 1;
  return r;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp < b.exp;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

class NumeratorEngine {
 public:
  explicit NumeratorEngine(int nvars) : n_(nvars) {}

  IntPoly run(std::vector<Monomial> gens) { return rec(minimalize(std::move(gens))); }

 private:
  std::string key(const std::vector<Monomial>& gens) const {
    std::string k;
    k.reserve(gens.size() * n_);
    for (const auto& g : gens) k.append(reinterpret_cast<const char*>(g.exp.data()), n_);
    return k;
  }

  // gens minimal and sorted
  IntPoly rec(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    // Split off generators sharing no variable with any other generator.
    std::vector<int> uses(n_, 0);
    for (const auto& g : gens)
      for (int i = 0; i < n_; ++i)
        if (g.exp[i]) ++uses[i];
    IntPoly factor{1};
    std::vector<Monomial> rest;
    for (const auto& g : gens) {
      bool isolated = true;
      for (int i = 0; i < n_; ++i)
        if (g.exp[i] && uses[i] > 1) isolated = false;
      if (isolated) factor = mul(factor, one_minus_t_pow(g.degree));
      else rest.push_back(g);
    }
    if (rest.empty()) return factor;

    auto k = key(rest);
    if (auto it = memo_.find(k); it != memo_.end()) return mul(factor, it->second);

    int pivot = 0;
    for (int i = 1; i < n_; ++i)
      if (uses[i] > uses[pivot]) pivot = i;
    // I + <x>: generators free of x, plus x.
    std::vector<Monomial> plus;
    Monomial x;
    x.exp[pivot] = 1;
    x.degree = 1;
    plus.push_back(x);
    // I : x
    std::vector<Monomial> colon;
    for (const auto& g : rest) {
      if (!g.exp[pivot]) {
        plus.push_back(g);
        colon.push_back(g);
      } else {
        Monomial h = g;
        --h.exp[pivot];
        --h.degree;
        colon.push_back(h);
      }
    }
    IntPoly a = rec(minimalize(std::move(plus)));
    IntPoly b = rec(minimalize(std::move(colon)));
    b.insert(b.begin(), 0);  // times t
    IntPoly r = add(a, b);
    trim(r);
    memo_.emplace(std::move(k), r);
    return mul(factor, r);
  }

  int n_;
  std::unordered_map<std::string, IntPoly> memo_;
};

/// Binomial coefficient C(m, r) extended polynomially to all integers m.
mpz_class binomial_poly(const mpz_class& m, int r) {
  if (r < 0) return 0;
  mpz_class num = 1;
  for (int s = 0; s < r; ++s) num *= m - s;
  mpz_class den = 1;
  for (int s = 2; s <= r; ++s) den *= s;
  return num / den;
}

template <class F>
void require_standard_homogeneous(const Ideal<F>& I) {
  if (!I.ring()->standard_grading()) throw AlgebraError("standard grading required");
  if (!I.is_homogeneous()) throw AlgebraError("homogeneous ideal required");
}

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly monomial_ideal_numerator(const std::vector<Monomial>& gens, int nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return {0};
  NumeratorEngine e(nvars);
  IntPoly r = e.run(gens);
  trim(r);
  return r;
}

std::int64_t HilbertSeries::degree() const {
  std::int64_t s = 0;
  for (auto c : reduced) s += c;
  return s;
}

std::int64_t HilbertSeries::hilbert_function(int d) const {
  if (d < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k)
    s += numerator[k] * binom(d - static_cast<int>(k) + nvars - 1, nvars - 1);
  return s;
}

std::int64_t HilbertSeries::hilbert_polynomial(std::int64_t d) const {
  if (krull_dim == 0) return 0;
  mpz_class s = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    s += mpz_class(static_cast<long>(reduced[k])) *
         binomial_poly(mpz_class(static_cast<long>(d - static_cast<std::int64_t>(k) + krull_dim - 1)),
                       krull_dim - 1);
  return s.get_si();
}

std::vector<mpq_class> HilbertSeries::hilbert_polynomial_coefficients() const {
  if (krull_dim == 0) return {};
  const int r = krull_dim - 1;
  mpz_class fact = 1;
  for (int s = 2; s <= r; ++s) fact *= s;
  std::vector<mpq_class> total(r + 1, 0);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    // prod_{s<r} (d - k + r - s)
    std::vector<mpq_class> p{1};
    for (int s = 0; s < r; ++s) {
      mpq_class c = static_cast<long>(r - s) - static_cast<long>(k);
      std::vector<mpq_class> q(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i] * c;
        q[i + 1] += p[i];
      }
      p = std::move(q);
    }
    for (int i = 0; i <= r; ++i) total[i] += p[i] * static_cast<long>(reduced[k]) / fact;
  }
  for (auto& c : total) c.canonicalize();
  return total;
}

template <class F>
HilbertSeries hilbert_series(const Ideal<F>& I) {
  require_standard_homogeneous(I);
  HilbertSeries hs;
  hs.nvars = I.ring()->nvars();
  std::vector<Monomial> leads;
  if (!I.is_zero()) leads = I.groebner(MonomialOrder::degrevlex()).leading_monomials();
  hs.numerator = monomial_ideal_numerator(leads, hs.nvars);
  IntPoly q = hs.numerator;
  int dim = hs.nvars;
  auto at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  if (q.size() == 1 && q[0] == 0) {
    hs.krull_dim = 0;
    hs.reduced = {0};
    return hs;
  }
  while (dim > 0 && at_one(q) == 0) {
    // divide by (1 - t): synthetic division
    IntPoly r(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = std::move(r);
    trim(q);
    --dim;
  }
  hs.krull_dim = dim;
  hs.reduced = q;
  return hs;
}

template <class F>
std::int64_t hilbert_function(const Ideal<F>& I, int d) {
  return hilbert_series(I).hilbert_function(d);
}

template <class F>
std::int64_t graded_piece_dimension(const Ideal<F>& I, int d) {
  const int n = I.ring()->nvars();
  return binom(n - 1 + d, d) - hilbert_function(I, d);
}

template <class F>
DimensionDegree dimension_degree(const Ideal<F>& I) {
  if (!I.is_zero() && I.is_unit()) throw AlgebraError("dimension of the unit ideal");
  auto hs = hilbert_series(I);
  return {hs.dimension(), hs.degree()};
}

// ---------------------------------------------------------------- census

namespace {

/// Incremental row echelon form over dense rows indexed by the monomials of
/// one degree.
template <class F>
class DegreePiece {
 public:
  using Elem = typename F::Elem;

  DegreePiece(const F& K, int nvars, int d) : K_(K), monos_(monomials_of_degree(nvars, d)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
    pivot_row_.assign(monos_.size(), -1);
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::vector<Monomial>& monomials() const { return monos_; }

  /// Returns true when the rank grew.
  bool insert(const Polynomial<F>& p) {
    std::vector<Elem> v(monos_.size(), K_.zero());
    for (const auto& t : p.terms()) v[index_.at(t.mono)] = t.coeff;
    return insert_dense(std::move(v));
  }

  bool insert_dense(std::vector<Elem> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (K_.is_zero(v[c])) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        auto inv = K_.inv(v[c]);
        for (std::size_t k = c; k < v.size(); ++k) v[k] = K_.mul(v[k], inv);
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      auto f = v[c];
      const auto& row = rows_[r];
      for (std::size_t k = c; k < v.size(); ++k)
        if (!K_.is_zero(row[k])) v[k] = K_.sub(v[k], K_.mul(f, row[k]));
    }
    return false;
  }

  /// Rows multiplied by each variable, as polynomials of degree d+1.
  std::vector<Polynomial<F>> shifted(const RingPtr<F>& ring) const {
    std::vector<Polynomial<F>> out;
    for (const auto& row : rows_) {
      std::vector<Term<F>> terms;
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!K_.is_zero(row[c])) terms.push_back({monos_[c], row[c]});
      auto p = Polynomial<F>::from_terms(ring, std::move(terms));
      for (int i = 0; i < ring->nvars(); ++i)
        out.push_back(p.times_monomial(ring->variable(i), K_.one()));
    }
    return out;
  }

 private:
  const F& K_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<int> pivot_row_;
  std::vector<std::vector<Elem>> rows_;
};

}  // namespace

template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  require_standard_homogeneous(I);
  if (I.is_zero()) return {};
  const auto& ring = I.ring();
  if (I.is_unit()) return {Polynomial<F>::constant(ring, ring->field().one())};
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.groebner(MonomialOrder::degrevlex()).elements()) gens.push_back(g.in_ring(ring));
  std::stable_sort(gens.begin(), gens.end(),
                   [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  const int lo = gens.front().degree(), hi = gens.back().degree();
  std::vector<Polynomial<F>> chosen;
  std::vector<Polynomial<F>> carried;  // spans I_{<d} in degree d
  std::size_t next = 0;
  for (int d = lo; d <= hi; ++d) {
    DegreePiece<F> piece(ring->field(), ring->nvars(), d);
    for (const auto& p : carried) piece.insert(p);
    for (; next < gens.size() && gens[next].degree() == d; ++next)
      if (piece.insert(gens[next])) chosen.push_back(gens[next]);
    if (d < hi) carried = piece.shifted(ring);
  }
  return chosen;
}

template <class F>
GeneratorCensus generator_census(const Ideal<F>& I) {
  GeneratorCensus c;
  for (const auto& g : minimal_generators(I)) ++c[g.degree()];
  return c;
}

std::string census_to_string(const GeneratorCensus& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, k] : c) {
    if (!first) os << ", ";
    first = false;
    os << d << ':' << k;
  }
  os << '}';
  return os.str();
}

#define DPCY_INSTANTIATE(F)                                                  \
  template HilbertSeries hilbert_series(const Ideal<F>&);                    \
  template std::int64_t hilbert_function(const Ideal<F>&, int);              \
  template std::int64_t graded_piece_dimension(const Ideal<F>&, int);        \
  template DimensionDegree dimension_degree(const Ideal<F>&);                \
  template std::vector<Polynomial<F>> minimal_generators(const Ideal<F>&);   \
  template GeneratorCensus generator_census(const Ideal<F>&);

DPCY_INSTANTIATE(PrimeField)
DPCY_INSTANTIATE(RationalField)

}  // namespace dpcy
