#ifndef DPCY_POLYNOMIAL_HPP
#define DPCY_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dpcy/field.hpp"
#include "dpcy/monomial.hpp"

namespace dpcy {

template <class F>
class PolyRing;

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

/// Polynomial ring F[x_0, ..., x_{n-1}] with a fixed monomial order and
/// positive (or zero) integer variable weights used for homogeneity tests.
template <class F>
class PolyRing : public std::enable_shared_from_this<PolyRing<F>> {
 public:
  static RingPtr<F> make(std::vector<std::string> names, F field = F{},
                         MonomialOrder order = MonomialOrder::degrevlex(),
                         std::vector<int> weights = {}) {
    return RingPtr<F>(new PolyRing(std::move(names), std::move(field), order,
                                   std::move(weights)));
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](int w) { return w == 1; });
  }

  /// -1 when absent.
  int index_of(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  Cmp cmp(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order_, nvars());
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) == Cmp::kGT;
  }

  int weighted_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.exp[i];
    return d;
  }

  Monomial variable(int i) const {
    Monomial m;
    m.exp[i] = 1;
    m.degree = 1;
    return m;
  }

  RingPtr<F> with_order(MonomialOrder order) const {
    if (order == order_) return this->shared_from_this();
    return make(names_, field_, order, weights_);
  }
  RingPtr<F> with_weights(std::vector<int> weights) const {
    return make(names_, field_, order_, std::move(weights));
  }

  /// Same variables, field and weights; the order may differ.
  bool same_variables(const PolyRing& o) const {
    return names_ == o.names_ && field_ == o.field_ && weights_ == o.weights_;
  }
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.same_variables(b) && a.order_ == b.order_;
  }

 private:
  PolyRing(std::vector<std::string> names, F field, MonomialOrder order,
           std::vector<int> weights)
      : names_(std::move(names)),
        field_(std::move(field)),
        order_(order),
        weights_(std::move(weights)) {
    if (names_.empty()) throw AlgebraError("ring needs at least one variable");
    if (names_.size() > kMaxVars)
      throw AlgebraError("at most " + std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw AlgebraError("duplicate variable name '" + names_[i] + "'");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
      throw AlgebraError("weight vector length mismatch");
    for (int w : weights_)
      if (w < 0) throw AlgebraError("negative variable weight");
    if (order_.kind == OrderKind::kBlock &&
        (order_.block_split < 0 || order_.block_split > nvars()))
      throw AlgebraError("block split out of range");
  }

  std::vector<std::string> names_;
  F field_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring order
/// and never carry a zero coefficient.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates,
  /// drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    const auto& R = *p.ring_;
    std::sort(terms.begin(), terms.end(), [&](const TermT& a, const TermT& b) {
      return R.greater(a.mono, b.mono);
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
        if (R.field().is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!R.field().is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Terms already sorted and nonzero.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Elem c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, int i) {
    auto m = ring->variable(i);
    auto one = ring->field().one();
    return monomial(std::move(ring), m, one);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<TermT>& terms() const { return terms_; }
  std::vector<TermT>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Elem& leading_coeff() const { return terms_.front().coeff; }

  /// Maximum standard total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree);
    return d;
  }
  /// Maximum weighted degree; -1 for zero.
  int weighted_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = ring_->weighted_degree(terms_[0].mono);
    for (const auto& t : terms_)
      if (ring_->weighted_degree(t.mono) != d) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Elem& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m, const Elem& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const F& K = field();
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        auto [it, fresh] = acc.try_emplace(a.mono * b.mono, K.zero());
        it->second = K.add(it->second, K.mul(a.coeff, b.coeff));
      }
    std::vector<TermT> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!K.is_zero(c)) out.push_back({m, std::move(c)});
    return from_terms(ring_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coeff())) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Polynomial derivative(int var) const {
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      int e = t.mono.exp[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.exp[var] = static_cast<std::uint8_t>(e - 1);
      m.degree = static_cast<std::uint16_t>(m.degree - 1);
      out.push_back({m, field().mul(t.coeff, field().from_int(e))});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Re-sorts the terms under another ring with the same variables.
  Polynomial in_ring(const RingPtr<F>& target) const {
    if (target.get() == ring_.get()) return *this;
    if (!ring_->same_variables(*target))
      throw AlgebraError("in_ring: variable sets differ");
    Polynomial r(target);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(), [&](const TermT& a, const TermT& b) {
      return target->greater(a.mono, b.mono);
    });
    return r;
  }

  /// Substitutes images[i] for variable i (all images in `target`).
  Polynomial substitute(const std::vector<Polynomial>& images,
                        const RingPtr<F>& target) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
      throw AlgebraError("substitute: wrong number of images");
    Polynomial result(target);
    // Cache powers per variable.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (int i = 0; i < ring_->nvars(); ++i) {
        int e = t.mono.exp[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, target->field().one()));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
        prod = prod * pw[e];
      }
      result += prod;
    }
    return result;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    const F& K = field();
    Elem acc = K.zero();
    for (const auto& t : terms_) {
      Elem v = t.coeff;
      for (int i = 0; i < ring_->nvars(); ++i)
        for (int k = 0; k < t.mono.exp[i]; ++k) v = K.mul(v, point[i]);
      acc = K.add(acc, v);
    }
    return acc;
  }

  /// Coefficient of an exact monomial (zero if absent).
  Elem coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field().zero();
  }

  bool uses_variable(int i) const {
    for (const auto& t : terms_)
      if (t.mono.exp[i]) return true;
    return false;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  void check_ring(const Polynomial& o) const {
    if (ring_.get() != o.ring_.get() && !(*ring_ == *o.ring_))
      throw AlgebraError("ring mismatch");
  }

 private:
  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const F& K = field();
    const auto& R = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      Cmp c;
      if (i == terms_.size()) c = Cmp::kLT;
      else if (j == o.terms_.size()) c = Cmp::kGT;
      else c = R.cmp(terms_[i].mono, o.terms_[j].mono);
      if (c == Cmp::kGT) {
        r.terms_.push_back(terms_[i++]);
      } else if (c == Cmp::kLT) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? K.neg(t.coeff) : t.coeff});
      } else {
        Elem s = subtract ? K.sub(terms_[i].coeff, o.terms_[j].coeff)
                          : K.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!K.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

using FpRing = PolyRing<PrimeField>;
using QQRing = PolyRing<RationalField>;
using FpPoly = Polynomial<PrimeField>;
using QQPoly = Polynomial<RationalField>;

}  // namespace dpcy

#endif  // DPCY_POLYNOMIAL_HPP
