#pragma once

// Curve germs through the point (boundary B_y, auxiliary divisor D_y),
// their pullback excess on the exceptional curves, mu(B, y), the
// quasi-log-terminal test, and the numeric ingredients of the freeness
// argument (the constant c and inequality (1)).

#include <map>
#include <string>
#include <vector>

#include "surfgerm/cycles.hpp"
#include "surfgerm/dualgraph.hpp"

namespace surfgerm {

/// A curve through the point, known only by its coefficient and the
/// intersection numbers of its strict transform with each exceptional curve
/// (indexed like the graph's vertices). Curves with equal nonempty labels in
/// different BoundaryData lists are the same curve.
struct CurveGerm {
  Rat coefficient;
  std::vector<long> incidence;
  std::string label;
};

/// Builds a curve from an id-keyed incidence map; throws InvalidBoundary on
/// unknown ids, negative entries, or an all-zero incidence.
CurveGerm make_curve(const DualGraph& g, Rat coefficient,
                     const std::map<std::string, long>& incidence, std::string label = {});

struct BoundaryData {
  std::vector<CurveGerm> curves;
  bool empty() const { return curves.empty(); }
};

/// Structural checks against the graph (incidence length, nonnegative and
/// not all zero, positive coefficients). Throws InvalidBoundary.
void validate_curves(const DualGraph& g, const BoundaryData& b);

/// The coefficients c_j of the exceptional part of f^*C: solves
/// A x = -incidence. Throws NotNegativeDefinite.
Cycle pullback_excess(const DualGraph& g, const CurveGerm& c);

/// Exceptional part of f^*(sum coeff_k C_k).
Cycle total_excess(const DualGraph& g, const BoundaryData& d);

/// mu(D, y) = max{ mu : mu (Z - Delta_y) <= f^*D }: the minimum over
/// vertices of excess_j / (z_j - a_j). Zero for an empty list. Vertices with
/// z_j - a_j <= 0 impose no upper bound; throws std::domain_error if none
/// remains (possible only far from log-terminal).
Rat mu(const DualGraph& g, const BoundaryData& d);

struct QltReport {
  bool is_qlt = false;
  bool integral_part_zero = false;  // every coefficient in [0, 1)
  Rat worst_coefficient;            // max_j (a_j + b'_j)
  Cycle combined;                   // Delta_y + B^exc
};

QltReport quasi_log_terminal_check(const DualGraph& g, const BoundaryData& b);

struct Lemma3Result {
  Rat c;
  /// d'_j + a_j + b'_j is an integer for every j (Cartier-ness of
  /// K_Y + ceil(D)). c <= 1/2 is only guaranteed when this holds.
  bool integrality_holds = false;
  Cycle integrality_values;  // d'_j + a_j + b'_j
};

/// c = min{ (1 - b_i)/d_i , (1 - a_j - b'_j)/d'_j } over the curves of d_y
/// and the exceptional curves. b_i is the coefficient in b_y of the curve
/// carrying the same label (0 if none). Throws EmptyDy.
Lemma3Result lemma3_constant(const DualGraph& g, const BoundaryData& b_y, const BoundaryData& d_y,
                             const DiscrepancyResult& delta);

struct InequalityOne {
  Rat lhs;
  bool holds = false;
};

/// lhs = (1-c)(1-mu) delta_y / 2 + excess_terms; holds iff lhs > 1.
InequalityOne inequality_one(const Rat& c, const Rat& mu, const Rat& delta_y,
                             const Rat& excess_terms);

/// sum_j (b'_j + c d'_j + a_j) (Delta_j . D_1), where D_1 meets the
/// exceptional curves with the given incidence.
Rat inequality_one_excess(const DualGraph& g, const BoundaryData& b_y, const BoundaryData& d_y,
                          const DiscrepancyResult& delta, const Rat& c,
                          const std::vector<long>& d1_incidence);

}  // namespace surfgerm
