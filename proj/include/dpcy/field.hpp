#ifndef DPCY_FIELD_HPP
#define DPCY_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dpcy {

/// Raised for any malformed algebraic input (unknown variables, ring
/// mismatches, invalid parameters).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { kRationals, kPrimeField };

/// Description of a coefficient field independent of its element type.
struct CoefficientField {
  FieldKind kind = FieldKind::kPrimeField;
  std::uint32_t characteristic = 32003;

  static CoefficientField rationals() { return {FieldKind::kRationals, 0}; }
  static CoefficientField prime(std::uint32_t p) {
    return {FieldKind::kPrimeField, p};
  }
  friend bool operator==(const CoefficientField&,
                         const CoefficientField&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// Z/pZ for an odd prime p < 2^31. Elements are stored in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
      throw AlgebraError("characteristic must be an odd prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }
  CoefficientField descriptor() const { return CoefficientField::prime(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  /// Decimal integer literal, reduced mod p.
  Elem from_digits(std::string_view digits) const;

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_int(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  bool is_negative(Elem a) const { return a > p_ / 2; }
  std::string to_string(Elem a) const { return std::to_string(to_int(a)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

/// The rationals, with GMP-backed exact elements.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  CoefficientField descriptor() const { return CoefficientField::rationals(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw AlgebraError("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  Elem from_int(std::int64_t v) const {
    return mpq_class(mpz_class(std::to_string(v)));
  }
  Elem from_digits(std::string_view digits) const {
    return mpq_class(mpz_class(std::string(digits)));
  }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) {
    return true;
  }
};

}  // namespace dpcy

#endif  // DPCY_FIELD_HPP
