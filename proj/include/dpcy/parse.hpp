#ifndef DPCY_PARSE_HPP
#define DPCY_PARSE_HPP

#include <string>
#include <string_view>

#include "dpcy/polynomial.hpp"

namespace dpcy {

/// Parses sums/products/powers of variables and integer constants, e.g.
/// "3*x^2*y - (z+1)^2". Division is accepted only by nonzero constants.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring);

/// Canonical form: terms in decreasing ring order, no spaces, "x^2*y".
template <class F>
std::string to_string(const Polynomial<F>& p);

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>& names);

}  // namespace dpcy

#endif  // DPCY_PARSE_HPP
