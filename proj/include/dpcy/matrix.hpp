#ifndef DPCY_MATRIX_HPP
#define DPCY_MATRIX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dpcy/polynomial.hpp"

namespace dpcy {

/// Dense rectangular matrix of polynomials over one ring.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr<F> ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw AlgebraError("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial<F>(ring_));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr<F>& ring() const { return ring_; }

  Polynomial<F>& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Polynomial<F>& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  PolyMatrix operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix shape mismatch");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
  }

  /// Rows and columns given as 0-based index lists.
  PolyMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    PolyMatrix s(ring_, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rs[i], cs[j]);
    return s;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

 private:
  RingPtr<F> ring_;
  int rows_, cols_;
  std::vector<Polynomial<F>> entries_;
};

namespace detail {

/// Laplace expansion along rows rs[depth..], columns from `mask`; memoized
/// on (depth, mask) so all minors sharing a row set reuse sub-determinants.
template <class F>
Polynomial<F> laplace(const PolyMatrix<F>& M, const std::vector<int>& rs, std::size_t depth,
                      std::uint32_t mask, std::map<std::pair<std::size_t, std::uint32_t>, Polynomial<F>>& memo) {
  if (depth == rs.size()) return Polynomial<F>::constant(M.ring(), M.ring()->field().one());
  auto key = std::make_pair(depth, mask);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Polynomial<F> acc(M.ring());
  bool negate = false;
  for (int j = 0; j < M.cols(); ++j) {
    if (!(mask & (1u << j))) continue;
    const auto& e = M.at(rs[depth], j);
    if (!e.is_zero()) {
      auto sub = laplace(M, rs, depth + 1, mask & ~(1u << j), memo);
      auto prod = e * sub;
      acc = negate ? acc - prod : acc + prod;
    }
    negate = !negate;
  }
  memo.emplace(key, acc);
  return acc;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::subsets(n, k, 0, cur, out);
  return out;
}

/// Every k x k minor, row subsets outer and column subsets inner, both
/// lexicographic. No deduplication.
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& M, int k) {
  if (k < 1 || k > std::min(M.rows(), M.cols()))
    throw AlgebraError("minor size " + std::to_string(k) + " out of range");
  if (M.cols() > 31) throw AlgebraError("too many columns for minors");
  std::vector<Polynomial<F>> out;
  auto row_sets = k_subsets(M.rows(), k);
  auto col_sets = k_subsets(M.cols(), k);
  for (const auto& rs : row_sets) {
    std::map<std::pair<std::size_t, std::uint32_t>, Polynomial<F>> memo;
    for (const auto& cs : col_sets) {
      std::uint32_t mask = 0;
      for (int c : cs) mask |= 1u << c;
      out.push_back(detail::laplace(M, rs, 0, mask, memo));
    }
  }
  return out;
}

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& M) {
  if (M.rows() != M.cols()) throw AlgebraError("determinant of a non-square matrix");
  if (M.rows() == 0) throw AlgebraError("determinant of an empty matrix");
  return minors(M, M.rows()).front();
}

}  // namespace dpcy

#endif  // DPCY_MATRIX_HPP
