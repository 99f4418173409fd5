#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dpcy/invariants.hpp"
#include "dpcy/linalg.hpp"

namespace dpcy {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::length() const {
  int len = 0;
  for (const auto& [ij, b] : entries)
    if (b != 0) len = std::max(len, ij.first);
  return len;
}

std::vector<std::int64_t> BettiTable::ranks() const {
  std::vector<std::int64_t> r(length() + 1, 0);
  for (const auto& [ij, b] : entries) r[ij.first] += b;
  return r;
}

int BettiTable::ideal_regularity() const {
  int reg = 0;
  for (const auto& [ij, b] : entries)
    if (b != 0 && ij.first >= 1) reg = std::max(reg, ij.second - ij.first + 1);
  return reg;
}

IntPoly BettiTable::alternating_sum() const {
  IntPoly p{0};
  for (const auto& [ij, b] : entries) {
    if (ij.second >= static_cast<int>(p.size())) p.resize(ij.second + 1, 0);
    p[ij.second] += (ij.first % 2 == 0 ? b : -b);
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

std::string BettiTable::to_string() const {
  const int len = length();
  int lo = 0, hi = 0;
  for (const auto& [ij, b] : entries)
    if (b != 0) {
      lo = std::min(lo, ij.second - ij.first);
      hi = std::max(hi, ij.second - ij.first);
    }
  auto tot = ranks();
  std::vector<std::size_t> width(len + 1, 1);
  for (int i = 0; i <= len; ++i) {
    width[i] = std::max(width[i], std::to_string(tot[i]).size());
    width[i] = std::max(width[i], std::to_string(i).size());
  }
  const std::size_t label = std::max<std::size_t>(6, std::to_string(hi).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::ostringstream os;
  os << std::string(label + 1, ' ');
  for (int i = 0; i <= len; ++i) os << (i ? " " : "") << pad(std::to_string(i), width[i]);
  os << '\n' << pad("total:", label) << ' ';
  for (int i = 0; i <= len; ++i) os << (i ? " " : "") << pad(std::to_string(tot[i]), width[i]);
  os << '\n';
  for (int r = lo; r <= hi; ++r) {
    os << pad(std::to_string(r) + ":", label) << ' ';
    for (int i = 0; i <= len; ++i) {
      auto b = at(i, i + r);
      os << (i ? " " : "") << pad(b ? std::to_string(b) : ".", width[i]);
    }
    os << '\n';
  }
  if (degree_bound >= 0) os << "(degrees <= " << degree_bound << ")\n";
  return os.str();
}

namespace {

template <class F>
struct VTerm {
  Monomial m;      // coefficient monomial
  Monomial total;  // m times the total monomial of the component
  int comp;
  typename F::Elem c;
};

template <class F>
struct FrameElement {
  int parent = -1;
  int partner = -1;
  Monomial mu;
  Monomial total;
  int degree = 0;
  /// Image under the differential, sorted decreasing in the Schreyer order
  /// of the level below.
  std::vector<VTerm<F>> vec;
};

struct SchreyerKey {
  Monomial total;
  int comp;
};

struct SchreyerGreater {
  int nvars;
  bool operator()(const SchreyerKey& a, const SchreyerKey& b) const {
    Cmp c = compare(a.total, b.total, MonomialOrder::degrevlex(), nvars);
    if (c != Cmp::kEQ) return c == Cmp::kGT;
    return a.comp < b.comp;
  }
};

bool lex_greater(const Monomial& a, const Monomial& b) { return a.exp > b.exp; }

template <class F>
class SchreyerResolution {
 public:
  using Elem = typename F::Elem;
  using Level = std::vector<FrameElement<F>>;

  SchreyerResolution(const F& K, int nvars, int degree_bound)
      : K_(K), n_(nvars), bound_(degree_bound) {}

  void start(const std::vector<Polynomial<F>>& basis) {
    Level zero(1);
    levels_.push_back(std::move(zero));
    Level one;
    for (const auto& g : basis) {
      if (bound_ >= 0 && g.degree() > bound_) continue;
      FrameElement<F> e;
      e.parent = 0;
      e.mu = g.leading_monomial();
      e.total = e.mu;
      e.degree = g.degree();
      for (const auto& t : g.terms()) e.vec.push_back({t.mono, t.mono, 0, t.coeff});
      one.push_back(std::move(e));
    }
    std::stable_sort(one.begin(), one.end(),
                     [](const auto& a, const auto& b) { return lex_greater(a.mu, b.mu); });
    levels_.push_back(std::move(one));
    index_children();
  }

  /// Builds and fills the next level; returns false when it is empty.
  bool step() {
    const Level& cur = levels_.back();
    Level next;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const auto& sib = children_.back()[cur[a].parent];
      std::vector<std::pair<Monomial, int>> quot;
      for (int b : sib) {
        if (b <= static_cast<int>(a)) continue;
        Monomial q = cur[b].mu / gcd(cur[a].mu, cur[b].mu);
        quot.push_back({q, b});
      }
      std::stable_sort(quot.begin(), quot.end(), [](const auto& x, const auto& y) {
        return x.first.degree < y.first.degree;
      });
      std::vector<std::pair<Monomial, int>> minimal;
      for (const auto& [q, b] : quot) {
        bool redundant = false;
        for (const auto& [r, _] : minimal)
          if (r.divides(q)) {
            redundant = true;
            break;
          }
        if (!redundant) minimal.push_back({q, b});
      }
      std::stable_sort(minimal.begin(), minimal.end(),
                       [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
      for (const auto& [q, b] : minimal) {
        FrameElement<F> e;
        e.parent = static_cast<int>(a);
        e.partner = b;
        e.mu = q;
        e.total = q * cur[a].total;
        e.degree = cur[a].degree + q.degree;
        if (bound_ >= 0 && e.degree > bound_) continue;
        next.push_back(std::move(e));
      }
    }
    if (next.empty()) return false;
    for (auto& e : next) fill(e);
    levels_.push_back(std::move(next));
    index_children();
    return true;
  }

  const std::vector<Level>& levels() const { return levels_; }

 private:
  void index_children() {
    const Level& below = levels_[levels_.size() - 2];
    std::vector<std::vector<int>> ch(below.size());
    const Level& cur = levels_.back();
    for (std::size_t i = 0; i < cur.size(); ++i) ch[cur[i].parent].push_back(static_cast<int>(i));
    children_.push_back(std::move(ch));
  }

  using Acc = std::map<SchreyerKey, std::pair<Monomial, Elem>, SchreyerGreater>;

  void add_into(Acc& acc, const SchreyerKey& k, const Monomial& m, const Elem& c) {
    auto [it, fresh] = acc.try_emplace(k, m, c);
    if (!fresh) {
      it->second.second = K_.add(it->second.second, c);
      if (K_.is_zero(it->second.second)) acc.erase(it);
    }
  }

  void add_shifted(Acc& acc, const std::vector<VTerm<F>>& v, const Monomial& q, const Elem& c) {
    for (const auto& t : v) add_into(acc, {t.total * q, t.comp}, t.m * q, K_.mul(c, t.c));
  }

  /// Computes the syzygy vector of a new element from its S-pair.
  void fill(FrameElement<F>& e) {
    const Level& cur = levels_.back();
    const auto& va = cur[e.parent];
    const auto& vb = cur[e.partner];
    const Monomial nu = (e.mu * va.mu) / vb.mu;
    const Elem one = K_.one(), minus_one = K_.neg(K_.one());

    Acc image{SchreyerGreater{n_}};
    add_shifted(image, va.vec, e.mu, one);
    add_shifted(image, vb.vec, nu, minus_one);

    Acc out{SchreyerGreater{n_}};
    add_into(out, {e.total, e.parent}, e.mu, one);
    add_into(out, {nu * vb.total, e.partner}, nu, minus_one);

    const auto& reducers = children_.back();
    while (!image.empty()) {
      auto it = image.begin();
      const Monomial m = it->second.first;
      const Elem c = it->second.second;
      const int comp = it->first.comp;
      int found = -1;
      for (int r : reducers[comp])
        if (cur[r].mu.divides(m)) {
          found = r;
          break;
        }
      if (found < 0) throw std::logic_error("Schreyer frame reduction stuck");
      const Monomial q = m / cur[found].mu;
      add_shifted(image, cur[found].vec, q, K_.neg(c));
      add_into(out, {q * cur[found].total, found}, q, K_.neg(c));
    }
    e.vec.clear();
    for (auto& [k, mc] : out) e.vec.push_back({mc.first, k.total, k.comp, mc.second});
    if (e.vec.empty() || e.vec.front().comp != e.parent || !(e.vec.front().m == e.mu))
      throw std::logic_error("Schreyer frame lead mismatch");
  }

  const F& K_;
  int n_;
  int bound_;
  std::vector<Level> levels_;
  /// children_[L-1][e] = elements of level L whose parent is e.
  std::vector<std::vector<std::vector<int>>> children_;
};

}  // namespace

template <class F>
BettiTable betti_table(const Ideal<F>& I, const ResolutionOptions& opts, ResolutionStats* stats) {
  const auto& ring = I.ring();
  if (!ring->standard_grading()) throw AlgebraError("standard grading required");
  if (!I.is_homogeneous()) throw AlgebraError("homogeneous ideal required");
  const F& K = ring->field();
  const int n = ring->nvars();

  std::vector<Polynomial<F>> basis;
  if (!I.is_zero()) basis = I.groebner(MonomialOrder::degrevlex()).elements();

  SchreyerResolution<F> res(K, n, opts.degree_bound);
  res.start(basis);
  const int last = opts.max_level < 0 ? n + 1 : opts.max_level + 1;
  while (static_cast<int>(res.levels().size()) <= last && res.step()) {
  }
  const auto& levels = res.levels();

  // rank[L][j]: rank of the scalar part of d_L in internal degree j.
  std::vector<std::map<int, std::int64_t>> rank(levels.size() + 1);
  for (std::size_t L = 1; L < levels.size(); ++L) {
    std::map<int, std::vector<int>> rows_by_deg, cols_by_deg;
    for (std::size_t i = 0; i < levels[L].size(); ++i) rows_by_deg[levels[L][i].degree].push_back(i);
    for (std::size_t i = 0; i < levels[L - 1].size(); ++i)
      cols_by_deg[levels[L - 1][i].degree].push_back(i);
    for (const auto& [j, rows] : rows_by_deg) {
      auto cit = cols_by_deg.find(j);
      if (cit == cols_by_deg.end()) continue;
      std::map<int, std::size_t> col_index;
      for (std::size_t k = 0; k < cit->second.size(); ++k) col_index[cit->second[k]] = k;
      std::vector<std::vector<typename F::Elem>> M;
      for (int r : rows) {
        std::vector<typename F::Elem> row(cit->second.size(), K.zero());
        for (const auto& t : levels[L][r].vec)
          if (t.m.is_one()) row[col_index.at(t.comp)] = t.c;
        M.push_back(std::move(row));
      }
      rank[L][j] = static_cast<std::int64_t>(matrix_rank(std::move(M), K));
    }
  }

  BettiTable table;
  table.degree_bound = opts.degree_bound;
  const std::size_t top =
      opts.max_level < 0 ? levels.size() : std::min<std::size_t>(levels.size(), opts.max_level + 1);
  for (std::size_t L = 0; L < top; ++L) {
    std::map<int, std::int64_t> count;
    for (const auto& e : levels[L]) ++count[e.degree];
    for (const auto& [j, c] : count) {
      std::int64_t b = c;
      if (auto it = rank[L].find(j); it != rank[L].end()) b -= it->second;
      if (auto it = rank[L + 1].find(j); it != rank[L + 1].end()) b -= it->second;
      if (b != 0) table.entries[{static_cast<int>(L), j}] = b;
    }
  }
  if (stats) {
    stats->frame_ranks.clear();
    for (const auto& lv : levels) stats->frame_ranks.push_back(lv.size());
  }
  return table;
}

template <class F>
int regularity(const Ideal<F>& I) {
  return betti_table(I).ideal_regularity();
}

#define DPCY_INSTANTIATE(F)                                                               \
  template BettiTable betti_table(const Ideal<F>&, const ResolutionOptions&, ResolutionStats*); \
  template int regularity(const Ideal<F>&);

DPCY_INSTANTIATE(PrimeField)
DPCY_INSTANTIATE(RationalField)

}  // namespace dpcy
