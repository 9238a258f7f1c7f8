#pragma once

// Fundamental cycle, discrepancy cycle, delta invariant and the
// classification of a germ from its dual graph.

#include <cstddef>
#include <string>
#include <vector>

#include "surfgerm/dualgraph.hpp"

namespace surfgerm {

struct BoundaryData;

enum class GermShape { Smooth, An, Dn, EType, LogTerminalOther, NotLogTerminal };

/// Shape of a germ plus the vertex order used by the closed formulas.
///
/// `order` lists vertex indices of the graph in the conventional numbering:
///   An    : 1..n along the chain (starting from the end with the lower
///           input index)
///   Dn    : chain vertices 1..n-2 (far end first), then the two forks
///   EType : center; arm1 far->near; arm2 near->far; the weight-2 arm
///   other : input order
struct GermKind {
  GermShape shape = GermShape::LogTerminalOther;
  std::size_t n = 0;            // number of vertices
  std::vector<long> weights;    // An: chain weights; Dn: w_1..w_{n-2}
  int etype_row = 0;            // 1..15 for EType
  long m = 0;                   // EType center weight
  bool is_rational_double_point = false;
  std::vector<std::size_t> order;

  bool is_log_terminal() const { return shape != GermShape::NotLogTerminal; }
  /// "smooth", "A_2", "D_5", "E(row 3, m=2)", "log-terminal (other)",
  /// "not log-terminal".
  std::string name() const;
};

struct DiscrepancyResult {
  Cycle delta_cycle;   // a_j, coefficients of f^*K_Y - K_X
  Cycle fundamental;   // z_j
  Rat delta_y;         // with empty boundary
  GermKind kind;
};

/// Artin's fundamental cycle by Laufer's procedure: start from the reduced
/// cycle and add the lowest-index curve with positive intersection until
/// none remains. Throws NotNegativeDefinite.
Cycle fundamental_cycle(const DualGraph& g);

/// Solves A a = (2 - w_i): the adjunction formula for rational curves.
/// For the smooth-point graph this yields a = -1, i.e. Delta_y = -Z.
/// Throws NotNegativeDefinite.
Cycle discrepancy_cycle(const DualGraph& g);

/// -(Z - Delta_y)^2 when (g, boundary) is quasi-log-terminal, 0 otherwise.
Rat delta_invariant(const DualGraph& g, const BoundaryData& boundary);

/// Pa(Z) = Z(Z+K)/2 + 1 with K.Delta_i = w_i - 2. Throws
/// std::invalid_argument unless z has integer coefficients.
Rat arithmetic_genus(const DualGraph& g, const Cycle& z);

/// Shape analysis, then the log-terminal test on Delta_y.
/// Throws NotNegativeDefinite.
GermKind classify(const DualGraph& g);

/// Everything above for the germ without boundary.
DiscrepancyResult analyze(const DualGraph& g);

}  // namespace surfgerm
