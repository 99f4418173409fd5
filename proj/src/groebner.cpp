#include "dpcy/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

namespace dpcy {

namespace {

template <class F>
using Terms = std::vector<Term<F>>;

/// out = a[start..] - c * m * b[bstart..]
template <class F>
void sub_scaled(const PolyRing<F>& R, const Terms<F>& a, std::size_t start,
                const typename F::Elem& c, const Monomial& m, const Terms<F>& b,
                std::size_t bstart, Terms<F>& out) {
  const F& K = R.field();
  out.clear();
  out.reserve(a.size() - start + b.size() - bstart);
  std::size_t i = start, j = bstart;
  Monomial bm;
  bool have_b = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_b) {
      bm = b[j].mono * m;
      have_b = true;
    }
    Cmp cmp;
    if (j >= b.size()) cmp = Cmp::kGT;
    else if (i >= a.size()) cmp = Cmp::kLT;
    else cmp = R.cmp(a[i].mono, bm);
    if (cmp == Cmp::kGT) {
      out.push_back(a[i++]);
    } else if (cmp == Cmp::kLT) {
      out.push_back({bm, K.neg(K.mul(c, b[j].coeff))});
      ++j;
      have_b = false;
    } else {
      auto v = K.sub(a[i].coeff, K.mul(c, b[j].coeff));
      if (!K.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
      have_b = false;
    }
  }
}

/// Index of the first divisor whose leading monomial divides m, or -1.
inline int find_divisor(const std::vector<Monomial>& leads, const std::vector<char>* active,
                        const Monomial& m) {
  for (std::size_t k = 0; k < leads.size(); ++k) {
    if (active && !(*active)[k]) continue;
    if (leads[k].divides(m)) return static_cast<int>(k);
  }
  return -1;
}

/// Full reduction of `terms` by `divisors` (monic or not); optionally only
/// the leading term is reduced (top reduction).
template <class F>
Terms<F> reduce_terms(const PolyRing<F>& R, Terms<F> cur, const std::vector<Polynomial<F>>& divisors,
                      const std::vector<Monomial>& leads, const std::vector<char>* active,
                      bool top_only, std::vector<Terms<F>>* quotients = nullptr) {
  const F& K = R.field();
  Terms<F> rem, tmp;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto& lt = cur[pos];
    int k = find_divisor(leads, active, lt.mono);
    if (k < 0) {
      if (top_only) {
        rem.insert(rem.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
        return rem;
      }
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const auto& g = divisors[k].terms();
    Monomial m = lt.mono / g[0].mono;
    auto c = K.is_one(g[0].coeff) ? lt.coeff : K.div(lt.coeff, g[0].coeff);
    if (quotients) (*quotients)[k].push_back({m, c});
    sub_scaled(R, cur, pos + 1, c, m, g, 1, tmp);
    std::swap(cur, tmp);
    pos = 0;
  }
  return rem;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;    // weighted degree of the lcm
  int sugar;  // sugar degree of the S-polynomial
};

/// Basis under construction plus the Gebauer-Moeller pair bookkeeping.
template <class F>
struct WorkBasis {
  const PolyRing<F>* R;
  std::vector<Polynomial<F>> polys;
  std::vector<Monomial> leads;
  std::vector<int> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;
  GroebnerStats* stats = nullptr;

  int pair_sugar(int i, int j, const Monomial& l) const {
    return std::max(sugar[i] + R->weighted_degree(l / leads[i]),
                    sugar[j] + R->weighted_degree(l / leads[j]));
  }

  /// Adds a monic polynomial and applies the Gebauer-Moeller criteria.
  void add(Polynomial<F> p, int s) {
    const int h = static_cast<int>(polys.size());
    const Monomial lh = p.leading_monomial();
    polys.push_back(std::move(p));
    leads.push_back(lh);
    sugar.push_back(s);
    active.push_back(1);

    std::vector<Pair> fresh;
    for (int i = 0; i < h; ++i) {
      if (!active[i]) continue;
      Monomial l = lcm(leads[i], lh);
      fresh.push_back({i, h, l, R->weighted_degree(l), pair_sugar(i, h, l)});
    }
    if (stats) stats->pairs_created += fresh.size();

    // Criterion M: drop pairs whose lcm is a proper multiple of another new lcm.
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = 0;
          break;
        }
      }
    // Criterion F: one representative per lcm; a coprime pair kills its class.
    std::vector<Pair> survivors;
    std::vector<char> seen(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a] || seen[a]) continue;
      bool any_coprime = false;
      for (std::size_t b = a; b < fresh.size(); ++b) {
        if (!keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        seen[b] = 1;
        if (coprime(leads[fresh[b].i], lh)) any_coprime = true;
      }
      if (!any_coprime) survivors.push_back(fresh[a]);
    }
    // Criterion B on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + survivors.size());
    for (const auto& pr : pairs) {
      if (lh.divides(pr.lcm)) {
        Monomial li = lcm(leads[pr.i], lh), lj = lcm(leads[pr.j], lh);
        if (!(li == pr.lcm) && !(lj == pr.lcm)) continue;
      }
      kept.push_back(pr);
    }
    for (auto& pr : survivors) kept.push_back(pr);
    pairs = std::move(kept);

    for (int i = 0; i < h; ++i)
      if (active[i] && lh.divides(leads[i])) active[i] = 0;
  }
};

template <class F>
Polynomial<F> make_s_poly(const PolyRing<F>& R, const RingPtr<F>& ring, const Polynomial<F>& f,
                          const Polynomial<F>& g, const Monomial& l) {
  const F& K = R.field();
  Terms<F> a, out;
  Monomial mf = l / f.leading_monomial();
  auto cf = K.inv(f.leading_coeff());
  a.reserve(f.size());
  for (std::size_t k = 1; k < f.size(); ++k)
    a.push_back({f.terms()[k].mono * mf, K.mul(f.terms()[k].coeff, cf)});
  Monomial mg = l / g.leading_monomial();
  auto cg = K.inv(g.leading_coeff());
  sub_scaled(R, a, 0, cg, mg, g.terms(), 1, out);
  return Polynomial<F>::from_sorted(ring, std::move(out));
}

template <class F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring, std::vector<Polynomial<F>> gens,
                                      int degree_bound, GroebnerStats* stats) {
  const auto& R = *ring;
  WorkBasis<F> W;
  W.R = &R;
  W.stats = stats;
  std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
    return a.weighted_degree() < b.weighted_degree();
  });
  for (auto& g : gens) {
    auto t = reduce_terms(R, g.terms(), W.polys, W.leads, &W.active, false);
    if (t.empty()) continue;
    int s = g.weighted_degree();
    W.add(Polynomial<F>::from_sorted(ring, std::move(t)).monic(), s);
  }
  while (!W.pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < W.pairs.size(); ++k) {
      const auto& a = W.pairs[k];
      const auto& b = W.pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (a.lcm.degree != b.lcm.degree) {
        if (a.lcm.degree < b.lcm.degree) best = k;
        continue;
      }
      if (R.cmp(a.lcm, b.lcm) == Cmp::kLT) best = k;
    }
    Pair pr = W.pairs[best];
    W.pairs.erase(W.pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (degree_bound >= 0 && pr.deg > degree_bound) continue;
    if (stats) ++stats->pairs_reduced;
    auto s = make_s_poly(R, ring, W.polys[pr.i], W.polys[pr.j], pr.lcm);
    auto t = reduce_terms(R, s.terms(), W.polys, W.leads, &W.active, false);
    if (t.empty()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    auto h = Polynomial<F>::from_sorted(ring, std::move(t)).monic();
    if (h.is_constant()) return {h};
    W.add(std::move(h), pr.sugar);
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t k = 0; k < W.polys.size(); ++k)
    if (W.active[k]) out.push_back(std::move(W.polys[k]));
  return out;
}

/// Degree-by-degree F4 for input homogeneous with respect to the ring weights.
template <class F>
class F4 {
 public:
  using Elem = typename F::Elem;

  F4(const RingPtr<F>& ring, GroebnerStats* stats) : ring_(ring), R_(*ring), K_(ring->field()) {
    W_.R = &R_;
    W_.stats = stats;
    stats_ = stats;
  }

  std::vector<Polynomial<F>> run(std::vector<Polynomial<F>> gens, int degree_bound) {
    std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
      return a.weighted_degree() < b.weighted_degree();
    });
    std::size_t next_gen = 0;
    for (;;) {
      int d = std::numeric_limits<int>::max();
      for (const auto& p : W_.pairs) d = std::min(d, p.deg);
      if (next_gen < gens.size()) d = std::min(d, gens[next_gen].weighted_degree());
      if (d == std::numeric_limits<int>::max()) break;
      if (degree_bound >= 0 && d > degree_bound) break;

      std::vector<std::pair<Monomial, int>> spec;
      std::vector<const Polynomial<F>*> raw;
      std::vector<Pair> rest;
      for (const auto& p : W_.pairs) {
        if (p.deg != d) {
          rest.push_back(p);
          continue;
        }
        if (stats_) ++stats_->pairs_reduced;
        spec.emplace_back(p.lcm / W_.leads[p.i], p.i);
        spec.emplace_back(p.lcm / W_.leads[p.j], p.j);
      }
      W_.pairs = std::move(rest);
      while (next_gen < gens.size() && gens[next_gen].weighted_degree() == d)
        raw.push_back(&gens[next_gen++]);

      auto fresh = reduce_degree(spec, raw);
      for (auto& h : fresh) {
        if (h.is_constant()) return {h};
        int s = h.weighted_degree();
        W_.add(std::move(h), s);
      }
    }
    std::vector<Polynomial<F>> out;
    for (std::size_t k = 0; k < W_.polys.size(); ++k)
      if (W_.active[k]) out.push_back(std::move(W_.polys[k]));
    return out;
  }

 private:
  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Elem> vals;
  };

  int choose_reducer(const Monomial& m) const {
    int best = -1;
    for (std::size_t k = 0; k < W_.leads.size(); ++k) {
      if (!W_.active[k] || !W_.leads[k].divides(m)) continue;
      if (best < 0 || W_.polys[k].size() < W_.polys[best].size()) best = static_cast<int>(k);
    }
    return best;
  }

  std::vector<Polynomial<F>> reduce_degree(std::vector<std::pair<Monomial, int>>& spec,
                                           const std::vector<const Polynomial<F>*>& raw) {
    // Deduplicate pair rows.
    std::sort(spec.begin(), spec.end(), [&](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return R_.greater(a.first, b.first);
    });
    spec.erase(std::unique(spec.begin(), spec.end(),
                           [](const auto& a, const auto& b) {
                             return a.second == b.second && a.first == b.first;
                           }),
               spec.end());

    // Symbolic preprocessing.
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<Monomial> monos;
    auto touch = [&](const Monomial& m) {
      auto [it, fresh] = index.try_emplace(m, static_cast<int>(monos.size()));
      if (fresh) monos.push_back(m);
    };
    for (const auto& [mult, k] : spec)
      for (const auto& t : W_.polys[k].terms()) touch(t.mono * mult);
    for (const auto* p : raw)
      for (const auto& t : p->terms()) touch(t.mono);

    std::vector<std::pair<Monomial, int>> reducers;
    std::unordered_map<Monomial, int, MonomialHash> reducer_of;  // lead monomial -> reducer slot
    for (std::size_t q = 0; q < monos.size(); ++q) {
      Monomial m = monos[q];
      int k = choose_reducer(m);
      if (k < 0) continue;
      Monomial mult = m / W_.leads[k];
      reducer_of.emplace(m, static_cast<int>(reducers.size()));
      reducers.emplace_back(mult, k);
      for (const auto& t : W_.polys[k].terms()) touch(t.mono * mult);
    }

    // Column order: decreasing monomials.
    std::vector<int> perm(monos.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return R_.greater(monos[a], monos[b]); });
    std::vector<std::uint32_t> col_of(monos.size());
    for (std::size_t c = 0; c < perm.size(); ++c) col_of[perm[c]] = static_cast<std::uint32_t>(c);
    const std::size_t ncols = monos.size();

    auto build = [&](const Polynomial<F>& p, const Monomial* mult) {
      Row r;
      r.cols.reserve(p.size());
      r.vals.reserve(p.size());
      for (const auto& t : p.terms()) {
        Monomial m = mult ? t.mono * *mult : t.mono;
        r.cols.push_back(col_of[index.at(m)]);
        r.vals.push_back(t.coeff);
      }
      return r;
    };

    std::vector<Row> pivots(ncols);
    std::vector<char> has_pivot(ncols, 0);
    for (const auto& [mult, k] : reducers) {
      Row r = build(W_.polys[k], &mult);
      std::uint32_t lead = r.cols[0];
      has_pivot[lead] = 1;
      pivots[lead] = std::move(r);
    }

    std::vector<Row> todo;
    for (const auto& [mult, k] : spec) {
      Monomial lead = W_.leads[k] * mult;
      auto it = reducer_of.find(lead);
      if (it != reducer_of.end() && reducers[it->second].second == k &&
          reducers[it->second].first == mult)
        continue;  // identical to its own reducer row
      todo.push_back(build(W_.polys[k], &mult));
    }
    for (const auto* p : raw) todo.push_back(build(*p, nullptr));

    std::vector<Elem> acc(ncols, K_.zero());
    auto scatter = [&](const Row& r) {
      for (std::size_t t = 0; t < r.cols.size(); ++t) acc[r.cols[t]] = r.vals[t];
    };
    auto eliminate = [&](std::size_t c, const Row& piv) {
      Elem f = acc[c];
      for (std::size_t t = 0; t < piv.cols.size(); ++t)
        acc[piv.cols[t]] = K_.sub(acc[piv.cols[t]], K_.mul(f, piv.vals[t]));
    };
    auto gather = [&](std::size_t from) {
      Row out;
      for (std::size_t c = from; c < ncols; ++c) {
        if (!K_.is_zero(acc[c])) {
          out.cols.push_back(static_cast<std::uint32_t>(c));
          out.vals.push_back(acc[c]);
          acc[c] = K_.zero();
        }
      }
      return out;
    };

    // Reduce by known pivots.
    std::vector<Row> reduced;
    for (const auto& r : todo) {
      scatter(r);
      std::size_t first = r.cols[0];
      for (std::size_t c = first; c < ncols; ++c)
        if (has_pivot[c] && !K_.is_zero(acc[c])) eliminate(c, pivots[c]);
      Row out = gather(first);
      if (!out.cols.empty()) reduced.push_back(std::move(out));
      else if (stats_) ++stats_->zero_reductions;
    }

    // Echelonize the remainder among itself.
    std::stable_sort(reduced.begin(), reduced.end(),
                     [](const Row& a, const Row& b) { return a.cols[0] < b.cols[0]; });
    std::vector<int> new_pivot(ncols, -1);
    std::vector<Row> fresh;
    for (const auto& r : reduced) {
      scatter(r);
      std::size_t first = r.cols[0];
      for (std::size_t c = first; c < ncols; ++c)
        if (new_pivot[c] >= 0 && !K_.is_zero(acc[c])) eliminate(c, fresh[new_pivot[c]]);
      Row out = gather(first);
      if (out.cols.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      Elem inv = K_.inv(out.vals[0]);
      for (auto& v : out.vals) v = K_.mul(v, inv);
      new_pivot[out.cols[0]] = static_cast<int>(fresh.size());
      fresh.push_back(std::move(out));
    }
    // Back substitution, largest lead column first.
    std::vector<int> order(fresh.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fresh[a].cols[0] > fresh[b].cols[0]; });
    for (int idx : order) {
      Row& r = fresh[idx];
      scatter(r);
      std::size_t first = r.cols[0];
      for (std::size_t c = first + 1; c < ncols; ++c)
        if (new_pivot[c] >= 0 && !K_.is_zero(acc[c])) eliminate(c, fresh[new_pivot[c]]);
      r = gather(first);
    }

    std::vector<Polynomial<F>> out;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fresh[a].cols[0] > fresh[b].cols[0]; });
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Row& r = fresh[*it];
      Terms<F> terms;
      terms.reserve(r.cols.size());
      for (std::size_t t = 0; t < r.cols.size(); ++t) terms.push_back({monos[perm[r.cols[t]]], r.vals[t]});
      out.push_back(Polynomial<F>::from_sorted(ring_, std::move(terms)));
    }
    return out;
  }

  RingPtr<F> ring_;
  const PolyRing<F>& R_;
  const F& K_;
  WorkBasis<F> W_;
  GroebnerStats* stats_ = nullptr;
};

template <class F>
std::vector<Polynomial<F>> to_ring(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    out.push_back(g.in_ring(ring));
  }
  return out;
}

}  // namespace

template <class F>
Polynomial<F> divide(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                     std::vector<Polynomial<F>>* quotients) {
  std::vector<Monomial> leads;
  for (const auto& d : divisors) {
    d.check_ring(f);
    if (d.is_zero()) throw AlgebraError("division by the zero polynomial");
    leads.push_back(d.leading_monomial());
  }
  std::vector<Terms<F>> q(divisors.size());
  auto rem = reduce_terms(*f.ring(), f.terms(), divisors, leads, nullptr, false,
                          quotients ? &q : nullptr);
  if (quotients) {
    quotients->clear();
    for (auto& t : q) quotients->push_back(Polynomial<F>::from_terms(f.ring(), std::move(t)));
  }
  return Polynomial<F>::from_sorted(f.ring(), std::move(rem));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  if (!(*f.ring() == *G.ring())) {
    if (!f.ring()->same_variables(*G.ring())) throw AlgebraError("ring mismatch");
    return divide(f.in_ring(G.ring()), G.elements());
  }
  return divide(f, G.elements());
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
  return dpcy::normal_form(f, *this);
}

template <class F>
std::vector<Polynomial<F>> interreduce(std::vector<Polynomial<F>> basis) {
  if (basis.empty()) return basis;
  const RingPtr<F> ring = basis.front().ring();
  const auto& R = *ring;
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return R.cmp(a.leading_monomial(), b.leading_monomial()) == Cmp::kLT;
  });
  std::vector<Polynomial<F>> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Monomial> leads;
  for (const auto& g : minimal) leads.push_back(g.leading_monomial());
  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const auto& g = minimal[k];
    Terms<F> tail(g.terms().begin() + 1, g.terms().end());
    auto red = reduce_terms(R, std::move(tail), minimal, leads, nullptr, false);
    Terms<F> full;
    full.reserve(red.size() + 1);
    full.push_back(g.terms()[0]);
    full.insert(full.end(), red.begin(), red.end());
    out.push_back(Polynomial<F>::from_sorted(ring, std::move(full)).monic());
  }
  return out;
}

template <class F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens,
                                        const MonomialOrder& order, const GroebnerOptions& options,
                                        GroebnerStats* stats) {
  if (gens.empty()) throw AlgebraError("groebner basis of an empty generator list");
  const auto& base = gens.front().ring();
  for (const auto& g : gens)
    if (!g.ring()->same_variables(*base)) throw AlgebraError("ring mismatch");
  auto ring = base->with_order(order);
  auto input = to_ring(gens, ring);
  if (input.empty()) return GroebnerBasis<F>(ring, {}, true, options.degree_bound);
  for (const auto& g : input)
    if (g.is_constant())
      return GroebnerBasis<F>(ring, {Polynomial<F>::constant(ring, ring->field().one())}, true);

  bool homogeneous = std::all_of(input.begin(), input.end(), [](const auto& g) { return g.is_homogeneous(); });
  if (options.degree_bound >= 0 && !homogeneous)
    throw AlgebraError("degree-truncated bases require homogeneous input");
  auto algo = options.algorithm;
  if (algo == GroebnerAlgorithm::kAuto)
    algo = homogeneous ? GroebnerAlgorithm::kF4 : GroebnerAlgorithm::kBuchberger;
  if (algo == GroebnerAlgorithm::kF4 && !homogeneous)
    throw AlgebraError("F4 path requires homogeneous input");

  std::vector<Polynomial<F>> raw = algo == GroebnerAlgorithm::kF4
                                       ? F4<F>(ring, stats).run(std::move(input), options.degree_bound)
                                       : buchberger(ring, std::move(input), options.degree_bound, stats);
  return GroebnerBasis<F>(ring, interreduce(std::move(raw)), true, options.degree_bound);
}

template <class F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens,
                                        const GroebnerOptions& options, GroebnerStats* stats) {
  if (gens.empty()) throw AlgebraError("groebner basis of an empty generator list");
  return reduced_groebner_basis(gens, gens.front().ring()->order(), options, stats);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) throw AlgebraError("S-polynomial of zero");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return make_s_poly(*f.ring(), f.ring(), f, g, l);
}

template <class F>
bool buchberger_criterion_holds(const GroebnerBasis<F>& G, std::size_t max_pairs,
                                std::uint64_t sample_seed) {
  const auto& E = G.elements();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) pairs.emplace_back(i, j);
  if (max_pairs > 0 && pairs.size() > max_pairs) {
    std::mt19937_64 gen(sample_seed);
    for (std::size_t k = 0; k < max_pairs; ++k) {
      std::size_t r = k + static_cast<std::size_t>(gen() % (pairs.size() - k));
      std::swap(pairs[k], pairs[r]);
    }
    pairs.resize(max_pairs);
  }
  for (auto [i, j] : pairs) {
    if (G.is_truncated()) {
      Monomial l = lcm(E[i].leading_monomial(), E[j].leading_monomial());
      if (G.ring()->weighted_degree(l) > G.degree_bound()) continue;
    }
    if (!normal_form(s_polynomial(E[i], E[j]), G).is_zero()) return false;
  }
  return true;
}

template <class F>
int SyzygyModule<F>::degree_of(std::size_t k) const {
  const auto& v = generators.at(k);
  int d = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) d = std::max(d, v[i].degree() + shifts[i]);
  return d;
}

template <class F>
SyzygyModule<F> module_syzygies(const std::vector<Polynomial<F>>& gens) {
  if (gens.empty()) throw AlgebraError("syzygies of an empty list");
  const auto ring = gens.front().ring();
  const auto& R = *ring;
  const F& K = R.field();
  const std::size_t r = gens.size();
  SyzygyModule<F> out;
  out.ring = ring;
  out.rank = static_cast<int>(r);
  for (const auto& g : gens) {
    g.check_ring(gens.front());
    if (!g.is_homogeneous()) throw AlgebraError("module_syzygies requires homogeneous generators");
    out.shifts.push_back(std::max(0, g.degree()));
  }

  using Vec = std::vector<Polynomial<F>>;
  auto zero_vec = [&] { return Vec(r, Polynomial<F>(ring)); };
  std::vector<Polynomial<F>> basis;
  std::vector<Vec> cof;
  std::vector<Monomial> leads;

  // Zero generators give trivial syzygies e_k.
  for (std::size_t k = 0; k < r; ++k) {
    if (gens[k].is_zero()) {
      Vec v = zero_vec();
      v[k] = Polynomial<F>::constant(ring, K.one());
      out.generators.push_back(std::move(v));
      continue;
    }
    auto inv = K.inv(gens[k].leading_coeff());
    basis.push_back(gens[k].scaled(inv));
    Vec v = zero_vec();
    v[k] = Polynomial<F>::constant(ring, inv);
    cof.push_back(std::move(v));
    leads.push_back(basis.back().leading_monomial());
  }

  struct P {
    std::size_t i, j;
    Monomial l;
  };
  std::vector<P> pairs;
  auto push_pairs = [&](std::size_t h) {
    for (std::size_t i = 0; i < h; ++i) pairs.push_back({i, h, lcm(leads[i], leads[h])});
  };
  for (std::size_t h = 1; h < basis.size(); ++h) push_pairs(h);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].l.degree < pairs[best].l.degree ||
          (pairs[k].l.degree == pairs[best].l.degree && R.cmp(pairs[k].l, pairs[best].l) == Cmp::kLT))
        best = k;
    }
    P pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Monomial mi = pr.l / leads[pr.i], mj = pr.l / leads[pr.j];
    auto s = basis[pr.i].times_monomial(mi, K.one()) - basis[pr.j].times_monomial(mj, K.one());
    Vec t = zero_vec();
    auto xi = Polynomial<F>::monomial(ring, mi, K.one());
    auto xj = Polynomial<F>::monomial(ring, mj, K.one());
    for (std::size_t c = 0; c < r; ++c) t[c] = cof[pr.i][c] * xi - cof[pr.j][c] * xj;
    std::vector<Terms<F>> q(basis.size());
    auto rem = reduce_terms(R, s.terms(), basis, leads, nullptr, false, &q);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (q[k].empty()) continue;
      auto qk = Polynomial<F>::from_terms(ring, std::move(q[k]));
      for (std::size_t c = 0; c < r; ++c)
        if (!cof[k][c].is_zero()) t[c] -= qk * cof[k][c];
    }
    if (rem.empty()) {
      bool nonzero = std::any_of(t.begin(), t.end(), [](const auto& p) { return !p.is_zero(); });
      if (nonzero) out.generators.push_back(std::move(t));
      continue;
    }
    auto h = Polynomial<F>::from_sorted(ring, std::move(rem));
    auto inv = K.inv(h.leading_coeff());
    basis.push_back(h.scaled(inv));
    for (auto& p : t) p = p.scaled(inv);
    cof.push_back(std::move(t));
    leads.push_back(basis.back().leading_monomial());
    push_pairs(basis.size() - 1);
  }
  return out;
}

#define DPCY_INSTANTIATE(F)                                                                      \
  template class GroebnerBasis<F>;                                                               \
  template Polynomial<F> divide(const Polynomial<F>&, const std::vector<Polynomial<F>>&,         \
                                std::vector<Polynomial<F>>*);                                    \
  template Polynomial<F> normal_form(const Polynomial<F>&, const GroebnerBasis<F>&);             \
  template GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>&,            \
                                                   const MonomialOrder&, const GroebnerOptions&, \
                                                   GroebnerStats*);                              \
  template GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>&,            \
                                                   const GroebnerOptions&, GroebnerStats*);      \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);               \
  template bool buchberger_criterion_holds(const GroebnerBasis<F>&, std::size_t, std::uint64_t); \
  template std::vector<Polynomial<F>> interreduce(std::vector<Polynomial<F>>);                   \
  template struct SyzygyModule<F>;                                                               \
  template SyzygyModule<F> module_syzygies(const std::vector<Polynomial<F>>&);

DPCY_INSTANTIATE(PrimeField)
DPCY_INSTANTIATE(RationalField)

}  // namespace dpcy
