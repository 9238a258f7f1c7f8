#include "surfgerm/boundary.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "surfgerm/errors.hpp"

namespace surfgerm {

CurveGerm make_curve(const DualGraph& g, Rat coefficient,
                     const std::map<std::string, long>& incidence, std::string label) {
  CurveGerm c{std::move(coefficient), std::vector<long>(g.size(), 0), std::move(label)};
  for (const auto& [id, k] : incidence) {
    auto idx = g.index_of(id);
    if (!idx) throw InvalidBoundary("incidence names unknown vertex '" + id + "'");
    if (k < 0) throw InvalidBoundary("negative incidence at vertex '" + id + "'");
    c.incidence[*idx] = k;
  }
  if (std::all_of(c.incidence.begin(), c.incidence.end(), [](long k) { return k == 0; }))
    throw InvalidBoundary("curve does not pass through the point (incidence all zero)");
  return c;
}

void validate_curves(const DualGraph& g, const BoundaryData& b) {
  for (const auto& c : b.curves) {
    if (c.incidence.size() != g.size()) throw InvalidBoundary("incidence length differs from graph");
    if (std::any_of(c.incidence.begin(), c.incidence.end(), [](long k) { return k < 0; }))
      throw InvalidBoundary("negative incidence");
    if (std::all_of(c.incidence.begin(), c.incidence.end(), [](long k) { return k == 0; }))
      throw InvalidBoundary("curve does not pass through the point (incidence all zero)");
    if (c.coefficient <= 0) throw InvalidBoundary("curve coefficient must be positive");
  }
}

Cycle pullback_excess(const DualGraph& g, const CurveGerm& c) {
  const auto m = build_intersection_matrix(g);
  if (!is_negative_definite(m)) throw NotNegativeDefinite();
  Cycle rhs(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) rhs[j] = -c.incidence[j];
  return solve_linear(m, rhs);
}

Cycle total_excess(const DualGraph& g, const BoundaryData& d) {
  // linear in the curves, so one solve with the summed incidence suffices
  Cycle out(g.size());
  if (d.empty()) return out;
  const auto m = build_intersection_matrix(g);
  if (!is_negative_definite(m)) throw NotNegativeDefinite();
  Cycle rhs(g.size());
  for (const auto& c : d.curves)
    for (std::size_t j = 0; j < g.size(); ++j) rhs[j] -= c.coefficient * c.incidence[j];
  return solve_linear(m, rhs);
}

Rat mu(const DualGraph& g, const BoundaryData& d) {
  if (d.empty()) return Rat(0);
  const Cycle excess = total_excess(g, d);
  const Cycle z = fundamental_cycle(g);
  const Cycle a = discrepancy_cycle(g);
  std::optional<Rat> best;
  for (std::size_t j = 0; j < g.size(); ++j) {
    Rat gap = z[j] - a[j];
    if (gap <= 0) continue;
    Rat ratio = excess[j] / gap;
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) throw std::domain_error("mu is unbounded: Z - Delta_y has no positive coefficient");
  return *best;
}

QltReport quasi_log_terminal_check(const DualGraph& g, const BoundaryData& b) {
  QltReport r;
  r.integral_part_zero = std::all_of(b.curves.begin(), b.curves.end(), [](const CurveGerm& c) {
    return c.coefficient >= 0 && c.coefficient < 1;
  });
  r.combined = discrepancy_cycle(g) + total_excess(g, b);
  r.worst_coefficient = *std::max_element(r.combined.coeffs.begin(), r.combined.coeffs.end());
  r.is_qlt = r.integral_part_zero && r.worst_coefficient < 1;
  return r;
}

Lemma3Result lemma3_constant(const DualGraph& g, const BoundaryData& b_y, const BoundaryData& d_y,
                             const DiscrepancyResult& delta) {
  if (d_y.empty()) throw EmptyDy();
  const Cycle b_exc = total_excess(g, b_y);
  const Cycle d_exc = total_excess(g, d_y);
  const Cycle& a = delta.delta_cycle;

  std::optional<Rat> c;
  auto take = [&](const Rat& v) {
    if (!c || v < *c) c = v;
  };
  for (const auto& dc : d_y.curves) {
    Rat b_i = 0;
    if (!dc.label.empty())
      for (const auto& bc : b_y.curves)
        if (bc.label == dc.label) b_i += bc.coefficient;
    take((1 - b_i) / dc.coefficient);
  }
  Lemma3Result r;
  r.integrality_values = Cycle(g.size());
  r.integrality_holds = true;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (d_exc[j] > 0) take((1 - a[j] - b_exc[j]) / d_exc[j]);
    r.integrality_values[j] = d_exc[j] + a[j] + b_exc[j];
    if (!is_integer(r.integrality_values[j])) r.integrality_holds = false;
  }
  r.c = *c;
  return r;
}

InequalityOne inequality_one(const Rat& c, const Rat& mu, const Rat& delta_y,
                             const Rat& excess_terms) {
  InequalityOne r;
  r.lhs = (1 - c) * (1 - mu) * delta_y / 2 + excess_terms;
  r.holds = r.lhs > 1;
  return r;
}

Rat inequality_one_excess(const DualGraph& g, const BoundaryData& b_y, const BoundaryData& d_y,
                          const DiscrepancyResult& delta, const Rat& c,
                          const std::vector<long>& d1_incidence) {
  const Cycle b_exc = total_excess(g, b_y);
  const Cycle d_exc = total_excess(g, d_y);
  Rat sum = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    sum += (b_exc[j] + c * d_exc[j] + delta.delta_cycle[j]) * d1_incidence[j];
  return sum;
}

}  // namespace surfgerm
