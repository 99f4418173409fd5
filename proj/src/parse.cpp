#include "dpcy/parse.hpp"

#include <cctype>
#include <sstream>

namespace dpcy {

namespace {

template <class F>
class Parser {
 public:
  Parser(std::string_view text, const RingPtr<F>& ring) : s_(text), ring_(ring) {}

  Polynomial<F> run() {
    skip();
    if (pos_ == s_.size()) fail("empty input");
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        auto d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->field().inv(d.leading_coeff()));
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial<F> base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 255) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial<F> primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial<F>::constant(ring_,
                                     ring_->field().from_digits(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) throw AlgebraError("unknown variable '" + name + "'");
      return Polynomial<F>::variable(ring_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return Parser<F>(text, ring).run();
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

template <class F>
std::string to_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const F& K = p.field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = K.is_negative(t.coeff);
    auto mag = neg ? K.neg(t.coeff) : t.coeff;
    if (neg) out += '-';
    else if (!first) out += '+';
    first = false;
    std::string mono = monomial_to_string(t.mono, p.ring()->names());
    if (mono.empty()) {
      out += K.to_string(mag);
    } else {
      if (!K.is_one(mag)) out += K.to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const RingPtr<PrimeField>&);
template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                    const RingPtr<RationalField>&);
template std::string to_string(const Polynomial<PrimeField>&);
template std::string to_string(const Polynomial<RationalField>&);

}  // namespace dpcy
