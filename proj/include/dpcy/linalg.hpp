#ifndef DPCY_LINALG_HPP
#define DPCY_LINALG_HPP

#include <unordered_map>
#include <vector>

#include "dpcy/polynomial.hpp"

namespace dpcy {

/// Reduced echelon basis of the span of `polys`, viewed as coefficient
/// vectors indexed by monomials. Elements are monic with distinct leading
/// monomials, and no element contains another element's leading monomial.
/// Sorted by decreasing leading monomial.
template <class F>
std::vector<Polynomial<F>> echelon_basis(const std::vector<Polynomial<F>>& polys) {
  std::vector<Polynomial<F>> basis;
  std::unordered_map<Monomial, std::size_t, MonomialHash> lead_of;
  for (const auto& p0 : polys) {
    if (p0.is_zero()) continue;
    const F& K = p0.field();
    Polynomial<F> p = p0;
    for (const auto& t : p0.terms()) {
      auto it = lead_of.find(t.mono);
      if (it == lead_of.end()) continue;
      auto c = p.coefficient(t.mono);
      if (!K.is_zero(c)) p -= basis[it->second].scaled(c);
    }
    if (p.is_zero()) continue;
    p = p.monic();
    const Monomial lead = p.leading_monomial();
    for (auto& b : basis) {
      auto c = b.coefficient(lead);
      if (!K.is_zero(c)) b -= p.scaled(c);
    }
    lead_of.emplace(lead, basis.size());
    basis.push_back(std::move(p));
  }
  if (basis.empty()) return basis;
  const auto& R = *basis.front().ring();
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return R.greater(a.leading_monomial(), b.leading_monomial());
  });
  return basis;
}

/// Rank of a dense matrix over F (rows are copied and eliminated).
template <class F>
std::size_t matrix_rank(std::vector<std::vector<typename F::Elem>> rows, const F& K) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && K.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = K.inv(rows[rank][c]);
    for (std::size_t k = c; k < ncols; ++k) rows[rank][k] = K.mul(rows[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (K.is_zero(rows[r][c])) continue;
      auto f = rows[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        rows[r][k] = K.sub(rows[r][k], K.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace dpcy

#endif  // DPCY_LINALG_HPP
