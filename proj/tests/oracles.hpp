// Brute-force reference implementations used by the tests. Nothing here
// calls into the Groebner, Hilbert or resolution code.
#ifndef DPCY_TESTS_ORACLES_HPP
#define DPCY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "dpcy/matrix.hpp"
#include "dpcy/polynomial.hpp"
#include "dpcy/random.hpp"

namespace oracle {

using namespace dpcy;

/// Degree-d monomials of n variables, decreasing in `order`.
inline std::vector<Monomial> sorted_monomials(int n, int d, const MonomialOrder& order) {
  auto ms = monomials_of_degree(n, d);
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, order, n) == Cmp::kGT;
  });
  return ms;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exp < b.exp; }
};

/// Reduced row echelon form of the degree-d piece of a homogeneous ideal,
/// spanned by all products m * f with deg m = d - deg f. Returns
/// pivot monomial -> row (as a polynomial in `ring`).
template <class F>
std::map<Monomial, Polynomial<F>, MonomialLess> macaulay_piece(
    const std::vector<Polynomial<F>>& gens, int d, const RingPtr<F>& ring) {
  const int n = ring->nvars();
  const auto& K = ring->field();
  const auto cols = sorted_monomials(n, d, ring->order());
  std::map<Monomial, std::size_t, MonomialLess> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& f : gens) {
    if (f.is_zero() || f.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - f.degree())) {
      std::vector<typename F::Elem> row(cols.size(), K.zero());
      for (const auto& t : f.terms()) row[col_of.at(t.mono * m)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  // Gauss-Jordan.
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && K.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const auto inv = K.inv(rows[r][c]);
    for (auto& x : rows[r]) x = K.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || K.is_zero(rows[i][c])) continue;
      const auto u = rows[i][c];
      for (std::size_t j = 0; j < cols.size(); ++j) rows[i][j] = K.sub(rows[i][j], K.mul(u, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::map<Monomial, Polynomial<F>, MonomialLess> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Term<F>> terms;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!K.is_zero(rows[i][j])) terms.push_back({cols[j], rows[i][j]});
    out.emplace(cols[pivots[i]], Polynomial<F>::from_terms(ring, std::move(terms)));
  }
  return out;
}

/// Reduced Groebner basis of a homogeneous ideal through degree `max_degree`,
/// read off the staircase: minimal leading monomials with their fully
/// reduced echelon rows. Sorted by increasing leading monomial.
template <class F>
std::vector<Polynomial<F>> staircase_groebner(const std::vector<Polynomial<F>>& gens, int max_degree,
                                              const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> in_ring;
  for (const auto& g : gens) in_ring.push_back(g.in_ring(ring));
  std::vector<Monomial> leads;
  std::vector<Polynomial<F>> basis;
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& [m, row] : macaulay_piece(in_ring, d, ring)) {
      bool minimal = true;
      for (const auto& l : leads) minimal = minimal && !l.divides(m);
      if (!minimal) continue;
      leads.push_back(m);
      basis.push_back(row);
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return ring->greater(b.leading_monomial(), a.leading_monomial());
  });
  return basis;
}

/// dim (R/I)_d by counting degree-d monomials outside the span of I_d.
template <class F>
std::int64_t hilbert_function(const std::vector<Polynomial<F>>& gens, int d, const RingPtr<F>& ring) {
  const auto piece = macaulay_piece(gens, d, ring);
  return static_cast<std::int64_t>(monomials_of_degree(ring->nvars(), d).size() - piece.size());
}

/// Koszul complex of a regular sequence of the given degrees:
/// beta_{i,j} = number of i-subsets with degree sum j.
inline std::map<std::pair<int, int>, std::int64_t> koszul_betti(const std::vector<int>& degrees) {
  std::map<std::pair<int, int>, std::int64_t> out;
  const int k = static_cast<int>(degrees.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int size = 0, sum = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) ++size, sum += degrees[i];
    ++out[{size, sum}];
  }
  return out;
}

/// Leibniz expansion over all permutations.
template <class F>
Polynomial<F> leibniz_determinant(const PolyMatrix<F>& M) {
  const int n = M.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<F> acc(M.ring());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    auto term = Polynomial<F>::constant(M.ring(), M.ring()->field().one());
    for (int i = 0; i < n; ++i) term *= M.at(i, perm[i]);
    acc += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Rank of the Jacobian matrix of `polys` evaluated at `point`.
template <class F>
std::size_t jacobian_rank_at(const std::vector<Polynomial<F>>& polys, const std::vector<typename F::Elem>& point) {
  const auto& K = polys.front().field();
  const int n = polys.front().ring()->nvars();
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& f : polys) {
    std::vector<typename F::Elem> row;
    for (int v = 0; v < n; ++v) row.push_back(f.derivative(v).evaluate(point));
    rows.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && K.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const auto inv = K.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const auto u = K.mul(rows[i][c], inv);
      for (int j = 0; j < n; ++j) rows[i][j] = K.sub(rows[i][j], K.mul(u, rows[r][j]));
    }
    ++r;
  }
  return r;
}

/// Long division of power series a / b through t^order (b[0] = 1).
inline std::vector<mpz_class> series_divide(std::vector<mpz_class> a, const std::vector<mpz_class>& b, int order) {
  a.resize(order + 1, 0);
  std::vector<mpz_class> q(order + 1, 0);
  for (int k = 0; k <= order; ++k) {
    q[k] = a[k];  // b[0] = 1
    for (std::size_t j = 1; j < b.size() && k + static_cast<int>(j) <= order; ++j) a[k + j] -= q[k] * b[j];
  }
  return q;
}

/// Chern numbers (H^3, c2.H, c3) of a complete intersection threefold by
/// expanding (1+h)^{n+1} and dividing by the product of (1 + d_i h).
inline std::vector<mpz_class> ci_chern_numbers(int n, const std::vector<int>& degrees, int order = 3) {
  std::vector<mpz_class> num(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n + 1, k);
    num[k] = b;
  }
  std::vector<mpz_class> den{1};
  for (int d : degrees) {
    std::vector<mpz_class> next(den.size() + 1, 0);
    for (std::size_t i = 0; i < den.size(); ++i) {
      next[i] += den[i];
      next[i + 1] += den[i] * d;
    }
    den = next;
  }
  auto c = series_divide(num, den, order);
  mpz_class h3 = 1;
  for (int d : degrees) h3 *= d;
  return {h3, c[2] * h3, c[3] * h3};
}

/// Random homogeneous ideal generators in `ring` with degrees in [1, max_degree].
template <class F>
std::vector<Polynomial<F>> random_homogeneous_ideal(const RingPtr<F>& ring, int count, int max_degree, Rng& rng,
                                                    int max_terms = 4) {
  std::vector<Polynomial<F>> gens;
  const auto& K = ring->field();
  for (int i = 0; i < count; ++i) {
    const int d = static_cast<int>(rng.between(1, max_degree));
    const auto ms = monomials_of_degree(ring->nvars(), d);
    std::vector<Term<F>> terms;
    const int t = static_cast<int>(rng.between(1, max_terms));
    for (int k = 0; k < t; ++k) terms.push_back({ms[rng.below(ms.size())], random_nonzero_element(K, rng)});
    auto p = Polynomial<F>::from_terms(ring, std::move(terms));
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Polynomial<F>::variable(ring, 0));
  return gens;
}

}  // namespace oracle

#endif  // DPCY_TESTS_ORACLES_HPP
