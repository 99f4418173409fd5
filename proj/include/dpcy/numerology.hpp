#ifndef DPCY_NUMEROLOGY_HPP
#define DPCY_NUMEROLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpcy {

/// Complete intersection threefold of the given multidegree in P^n.
struct CISpec {
  int ambient_dim = 0;
  std::vector<int> multidegree;

  /// Throws AlgebraError unless n - 3 = #degrees >= 1 and every degree >= 2.
  void validate() const;
  std::string to_string() const;  // e.g. "P5[3,3]"
};

struct CIInvariants {
  std::int64_t h3 = 0;    // H^3
  std::int64_t c2h = 0;   // c_2 . H
  std::int64_t euler = 0; // topological Euler number

  friend bool operator==(const CIInvariants&, const CIInvariants&) = default;
};

/// Coefficients of (1+h)^{n+1} / prod (1 + d_i h) through h^order.
std::vector<std::int64_t> chern_series(const CISpec& spec, int order = 3);

CIInvariants ci_chern(const CISpec& spec);

struct ContractionInvariants {
  std::int64_t g3 = 0;   // G^3 = H^3 + d
  std::int64_t c2g = 0;  // c_2 . G = c_2 . H + 12 - 2d
  std::int64_t h0 = 0;   // G^3/6 + c_2.G/12

  friend bool operator==(const ContractionInvariants&, const ContractionInvariants&) = default;
};

/// For G = H + D' with D' a del Pezzo surface of degree d (6 <= d <= 8).
ContractionInvariants contraction_invariants(const CIInvariants& ci, int d);

struct EulerChain {
  std::int64_t chi_x = 0;  // small resolution of the nodal CI
  std::int64_t chi_y = 0;  // after contracting the del Pezzo surface
};

EulerChain euler_chain(const CIInvariants& ci, std::int64_t nodes, int d);

/// 2 (1 - h^{1,2}) for h^{1,1} = 1.
std::int64_t euler_smoothed(int h12);

struct Table1Row {
  int row = 0;
  int d = 0;
  CISpec ci;
  std::int64_t nodes = 0;
  /// Input back-derived from the published Euler number; absent for row 10.
  std::optional<int> h12;

  CIInvariants chern;
  ContractionInvariants contraction;
  EulerChain chain;
  std::optional<std::int64_t> chi_yt;
  /// chi(Y_t) - chi(Y), reported only.
  std::optional<std::int64_t> smoothing_defect;

  /// Published H^3, h^0(H), chi(Y_t); absent where the table has "--".
  std::optional<std::int64_t> published_h3, published_h0, published_chi;
};

/// All ten rows, checked against the published columns; throws
/// AlgebraError naming the row and column on any mismatch.
std::vector<Table1Row> assemble_table1();

/// Aligned text rendering.
std::string table1_text(const std::vector<Table1Row>& rows);

}  // namespace dpcy

#endif  // DPCY_NUMEROLOGY_HPP
