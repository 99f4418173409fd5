#include "dpcy/field.hpp"

#include <cctype>

namespace dpcy {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw AlgebraError("division by zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_digits(std::string_view digits) const {
  std::uint64_t acc = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw AlgebraError("malformed integer literal");
    acc = (acc * 10 + static_cast<std::uint64_t>(ch - '0')) % p_;
  }
  return static_cast<Elem>(acc);
}

}  // namespace dpcy
