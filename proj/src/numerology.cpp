#include "dpcy/numerology.hpp"

#include <iomanip>
#include <sstream>

#include "dpcy/field.hpp"

namespace dpcy {

void CISpec::validate() const {
  const int k = static_cast<int>(multidegree.size());
  if (k < 1) throw AlgebraError("complete intersection needs at least one degree");
  if (ambient_dim - 3 != k) throw AlgebraError("threefold needs n - 3 equations in P^n");
  for (int d : multidegree)
    if (d < 2) throw AlgebraError("degrees must be at least 2");
}

std::string CISpec::to_string() const {
  std::string s = "P" + std::to_string(ambient_dim) + "[";
  for (std::size_t i = 0; i < multidegree.size(); ++i) s += (i ? "," : "") + std::to_string(multidegree[i]);
  return s + "]";
}

std::vector<std::int64_t> chern_series(const CISpec& spec, int order) {
  spec.validate();
  std::vector<std::int64_t> c(order + 1, 0);
  // (1+h)^{n+1}
  for (int k = 0; k <= order; ++k) {
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (spec.ambient_dim + 2 - i) / i;
    c[k] = b;
  }
  for (int d : spec.multidegree) {
    // divide by (1 + d h): c'_k = c_k - d c'_{k-1}
    for (int k = 1; k <= order; ++k) c[k] -= d * c[k - 1];
  }
  return c;
}

CIInvariants ci_chern(const CISpec& spec) {
  auto c = chern_series(spec, 3);
  std::int64_t h3 = 1;
  for (int d : spec.multidegree) h3 *= d;
  return {h3, c[2] * h3, c[3] * h3};
}

ContractionInvariants contraction_invariants(const CIInvariants& ci, int d) {
  if (d < 6 || d > 8) throw AlgebraError("del Pezzo degree must lie in 6..8");
  ContractionInvariants out;
  out.g3 = ci.h3 + d;
  out.c2g = ci.c2h + 12 - 2 * d;
  const std::int64_t twelve_h0 = 2 * out.g3 + out.c2g;
  if (twelve_h0 % 12 != 0)
    throw AlgebraError("h0 = G^3/6 + c2.G/12 is not an integer (G^3 = " + std::to_string(out.g3) +
                       ", c2.G = " + std::to_string(out.c2g) + ")");
  out.h0 = twelve_h0 / 12;
  return out;
}

EulerChain euler_chain(const CIInvariants& ci, std::int64_t nodes, int d) {
  if (nodes < 0) throw AlgebraError("negative node count");
  EulerChain e;
  e.chi_x = ci.euler + 2 * nodes;
  e.chi_y = e.chi_x - (12 - d) + 1;
  return e;
}

std::int64_t euler_smoothed(int h12) {
  if (h12 < 0) throw AlgebraError("negative h12");
  return 2 * (1 - static_cast<std::int64_t>(h12));
}

namespace {

struct Published {
  int row, d, n;
  std::vector<int> degrees;
  std::int64_t nodes;
  std::optional<int> h12;
  std::optional<std::int64_t> h3, h0, chi;
};

const std::vector<Published>& published_rows() {
  static const std::vector<Published> rows{
      {1, 6, 5, {2, 4}, 44, 47, 14, 7, -92},
      {2, 6, 5, {2, 4}, 44, 48, 14, 7, -94},
      {3, 6, 5, {3, 3}, 36, 39, 15, 7, -76},
      {4, 6, 5, {3, 3}, 36, 40, 15, 7, -78},
      {5, 7, 5, {3, 3}, 44, 31, 16, 7, -60},
      {6, 8, 5, {3, 3}, 52, 23, 17, 7, -44},
      {7, 7, 6, {2, 2, 3}, 37, 38, 19, 8, -74},
      {8, 8, 6, {2, 2, 3}, 44, 31, 20, 8, -60},
      {9, 8, 7, {2, 2, 2, 2}, 42, 26, 24, 9, -50},
      {10, 8, 7, {2, 2, 2, 2}, 36, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
  };
  return rows;
}

void require(const Table1Row& r, const char* column, std::optional<std::int64_t> published, std::int64_t got) {
  if (published && *published != got)
    throw AlgebraError("table row " + std::to_string(r.row) + ", column " + column + ": computed " +
                       std::to_string(got) + ", published " + std::to_string(*published));
}

}  // namespace

std::vector<Table1Row> assemble_table1() {
  std::vector<Table1Row> out;
  for (const auto& p : published_rows()) {
    Table1Row r;
    r.row = p.row;
    r.d = p.d;
    r.ci = {p.n, p.degrees};
    r.nodes = p.nodes;
    r.h12 = p.h12;
    r.chern = ci_chern(r.ci);
    r.contraction = contraction_invariants(r.chern, r.d);
    r.chain = euler_chain(r.chern, r.nodes, r.d);
    if (r.h12) {
      r.chi_yt = euler_smoothed(*r.h12);
      r.smoothing_defect = *r.chi_yt - r.chain.chi_y;
    }
    r.published_h3 = p.h3;
    r.published_h0 = p.h0;
    r.published_chi = p.chi;
    require(r, "H^3", p.h3, r.contraction.g3);
    require(r, "h^0(H)", p.h0, r.contraction.h0);
    if (r.chi_yt) require(r, "chi(Y_t)", p.chi, *r.chi_yt);
    out.push_back(std::move(r));
  }
  return out;
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("--"); };
  os << std::setw(3) << "No" << std::setw(4) << "d" << std::setw(14) << "CI" << std::setw(7) << "nodes"
     << std::setw(6) << "H^3" << std::setw(8) << "h0(H)" << std::setw(7) << "c2.G" << std::setw(7) << "chiX"
     << std::setw(7) << "chiY" << std::setw(6) << "h12" << std::setw(9) << "chi(Yt)" << std::setw(8) << "defect"
     << '\n';
  for (const auto& r : rows) {
    const bool shown = r.published_h3.has_value();
    os << std::setw(3) << r.row << std::setw(4) << r.d << std::setw(14) << r.ci.to_string() << std::setw(7)
       << r.nodes << std::setw(6) << (shown ? std::to_string(r.contraction.g3) : "--") << std::setw(8)
       << (shown ? std::to_string(r.contraction.h0) : "--") << std::setw(7) << r.contraction.c2g << std::setw(7)
       << r.chain.chi_x << std::setw(7) << r.chain.chi_y << std::setw(6)
       << (r.h12 ? std::to_string(*r.h12) : "--") << std::setw(9) << opt(r.chi_yt) << std::setw(8)
       << opt(r.smoothing_defect) << '\n';
  }
  return os.str();
}

}  // namespace dpcy
