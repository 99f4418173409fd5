#ifndef DPCY_MONOMIAL_HPP
#define DPCY_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dpcy/field.hpp"

namespace dpcy {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Slots beyond the ring's variable count stay zero,
/// so equality and hashing never need the variable count.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;

  static Monomial from_exponents(std::span<const int> e);

  int operator[](std::size_t i) const { return exp[i]; }

  bool is_one() const { return degree == 0; }

  bool divides(const Monomial& other) const {
    if (degree > other.degree) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; the caller guarantees b divides a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      lo |= static_cast<std::uint64_t>(m.exp[i]) << (8 * i);
      hi |= static_cast<std::uint64_t>(m.exp[i + 8]) << (8 * i);
    }
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

enum class OrderKind { kLex, kDegRevLex, kBlock };
enum class Cmp { kLT = -1, kEQ = 0, kGT = 1 };

/// Block order: the first `block_split` variables are compared by degrevlex
/// and dominate; ties are broken by degrevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::kDegRevLex;
  int block_split = 0;

  static MonomialOrder degrevlex() { return {OrderKind::kDegRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::kLex, 0}; }
  static MonomialOrder block(int k) { return {OrderKind::kBlock, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline Cmp revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? Cmp::kGT : Cmp::kLT;
  }
  return Cmp::kEQ;
}

inline int partial_degree(const Monomial& a, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += a.exp[i];
  return d;
}

}  // namespace detail

/// Compares two monomials over `nvars` variables (x_0 > x_1 > ...).
inline Cmp compare(const Monomial& a, const Monomial& b,
                   const MonomialOrder& order, int nvars) {
  switch (order.kind) {
    case OrderKind::kDegRevLex:
      if (a.degree != b.degree) return a.degree > b.degree ? Cmp::kGT : Cmp::kLT;
      return detail::revlex_tail(a, b, 0, nvars);
    case OrderKind::kLex:
      for (int i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? Cmp::kGT : Cmp::kLT;
      return Cmp::kEQ;
    case OrderKind::kBlock: {
      const int k = order.block_split;
      int da = detail::partial_degree(a, 0, k), db = detail::partial_degree(b, 0, k);
      if (da != db) return da > db ? Cmp::kGT : Cmp::kLT;
      Cmp c = detail::revlex_tail(a, b, 0, k);
      if (c != Cmp::kEQ) return c;
      da = a.degree - da;
      db = b.degree - db;
      if (da != db) return da > db ? Cmp::kGT : Cmp::kLT;
      return detail::revlex_tail(a, b, k, nvars);
    }
  }
  return Cmp::kEQ;
}

/// All monomials of total degree d in the first `nvars` variables, in
/// decreasing lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Checked comparison for exponent vectors given as spans.
Cmp compare_monomials(std::span<const int> a, std::span<const int> b,
                      const MonomialOrder& order);

}  // namespace dpcy

#endif  // DPCY_MONOMIAL_HPP
