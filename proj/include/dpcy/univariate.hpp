#ifndef DPCY_UNIVARIATE_HPP
#define DPCY_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "dpcy/field.hpp"

namespace dpcy {

/// Dense univariate polynomial, coefficient k of t^k; no trailing zeros
/// (the zero polynomial is empty).
template <class F>
using UPoly = std::vector<typename F::Elem>;

template <class F>
void utrim(const F& K, UPoly<F>& p) {
  while (!p.empty() && K.is_zero(p.back())) p.pop_back();
}

template <class F>
int udegree(const UPoly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
UPoly<F> uderivative(const F& K, const UPoly<F>& p) {
  UPoly<F> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(K.mul(p[k], K.from_int(static_cast<std::int64_t>(k))));
  utrim(K, d);
  return d;
}

template <class F>
UPoly<F> uremainder(const F& K, UPoly<F> a, const UPoly<F>& b) {
  if (b.empty()) throw AlgebraError("division by the zero polynomial");
  const auto lead_inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    const auto c = K.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = K.sub(a[shift + k], K.mul(c, b[k]));
    a.pop_back();
    utrim(K, a);
  }
  return a;
}

/// Monic gcd.
template <class F>
UPoly<F> ugcd(const F& K, UPoly<F> a, UPoly<F> b) {
  utrim(K, a);
  utrim(K, b);
  while (!b.empty()) {
    auto r = uremainder(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto inv = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, inv);
  }
  return a;
}

template <class F>
typename F::Elem uevaluate(const F& K, const UPoly<F>& p, const typename F::Elem& x) {
  auto acc = K.zero();
  for (std::size_t k = p.size(); k-- > 0;) acc = K.add(K.mul(acc, x), p[k]);
  return acc;
}

/// True when p has no repeated factor over the algebraic closure.
template <class F>
bool usquarefree(const F& K, const UPoly<F>& p) {
  if (p.size() <= 2) return !p.empty();
  auto g = ugcd(K, p, uderivative(K, p));
  return g.size() == 1;
}

/// Characteristic polynomial det(t I - A) via reduction to Hessenberg form.
template <class F>
UPoly<F> characteristic_polynomial(const F& K, std::vector<std::vector<typename F::Elem>> H) {
  const std::size_t n = H.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && K.is_zero(H[piv][m - 1])) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (auto& row : H) std::swap(row[piv], row[m]);
    }
    const auto inv = K.inv(H[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (K.is_zero(H[i][m - 1])) continue;
      const auto u = K.mul(H[i][m - 1], inv);
      for (std::size_t j = 0; j < n; ++j) H[i][j] = K.sub(H[i][j], K.mul(u, H[m][j]));
      for (std::size_t j = 0; j < n; ++j) H[j][m] = K.add(H[j][m], K.mul(u, H[j][i]));
    }
  }
  std::vector<UPoly<F>> p(n + 1);
  p[0] = {K.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly<F> next(m + 1, K.zero());
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = K.add(next[k + 1], p[m - 1][k]);
      next[k] = K.sub(next[k], K.mul(H[m - 1][m - 1], p[m - 1][k]));
    }
    auto t = K.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = K.mul(t, H[m - i][m - i - 1]);
      const auto c = K.mul(t, H[m - i - 1][m - 1]);
      if (K.is_zero(c)) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k)
        next[k] = K.sub(next[k], K.mul(c, p[m - i - 1][k]));
    }
    p[m] = std::move(next);
  }
  utrim(K, p[n]);
  return p[n];
}

}  // namespace dpcy

#endif  // DPCY_UNIVARIATE_HPP
