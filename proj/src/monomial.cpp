#include "dpcy/monomial.hpp"

#include <algorithm>
#include <string>

namespace dpcy {

Monomial Monomial::from_exponents(std::span<const int> e) {
  if (e.size() > kMaxVars) throw AlgebraError("too many exponents");
  Monomial m;
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw AlgebraError("exponent out of range");
    m.exp[i] = static_cast<std::uint8_t>(e[i]);
    d += e[i];
  }
  m.degree = static_cast<std::uint16_t>(d);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > 255) throw AlgebraError("exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(s);
  }
  m.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  m.degree = static_cast<std::uint16_t>(a.degree - b.degree);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    d += m.exp[i];
  }
  m.degree = static_cast<std::uint16_t>(d);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::min(a.exp[i], b.exp[i]);
    d += m.exp[i];
  }
  m.degree = static_cast<std::uint16_t>(d);
  return m;
}

namespace {

void fill(int nvars, int i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i == nvars - 1) {
    cur.exp[i] = static_cast<std::uint8_t>(left);
    out.push_back(cur);
    cur.exp[i] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.exp[i] = static_cast<std::uint8_t>(e);
    fill(nvars, i + 1, left - e, cur, out);
  }
  cur.exp[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (nvars < 1 || nvars > static_cast<int>(kMaxVars)) throw AlgebraError("bad variable count");
  if (d < 0) return {};
  if (d > 255) throw AlgebraError("exponent out of range");
  std::vector<Monomial> out;
  Monomial cur;
  cur.degree = static_cast<std::uint16_t>(d);
  fill(nvars, 0, d, cur, out);
  return out;
}

Cmp compare_monomials(std::span<const int> a, std::span<const int> b,
                      const MonomialOrder& order) {
  if (a.size() != b.size())
    throw AlgebraError("monomial length mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  return compare(Monomial::from_exponents(a), Monomial::from_exponents(b), order,
                 static_cast<int>(a.size()));
}

}  // namespace dpcy
