#include "surfgerm/freeness.hpp"

#include <stdexcept>

#include "surfgerm/errors.hpp"

namespace surfgerm {

std::string to_string(Outcome o) { return o == Outcome::Free ? "Free" : "NotDetermined"; }

std::string to_string(FreePath p) {
  switch (p) {
    case FreePath::None: return "none";
    case FreePath::NotQuasiLogTerminal: return "not-quasi-log-terminal";
    case FreePath::NotTypeA: return "non-A_n clause";
    case FreePath::CurveCondition: return "D.C condition";
  }
  return "none";
}

Verdict check_freeness(const FreenessProblem& p) {
  Verdict v;
  v.kind = classify(p.graph);
  v.d_squared = p.d_squared;
  v.min_dc = p.min_dc;
  const auto qlt = quasi_log_terminal_check(p.graph, p.boundary);
  v.quasi_log_terminal = qlt.is_qlt;
  v.delta_y = delta_invariant(p.graph, p.boundary);
  try {
    v.mu = mu(p.graph, p.boundary);
  } catch (const std::domain_error&) {
    v.caveats.push_back("mu(B,y) is undefined for this germ");
  }
  const Rat one_minus_mu = 1 - v.mu.value_or(Rat(0));
  v.d_squared_threshold = one_minus_mu * one_minus_mu * v.delta_y;
  v.dc_threshold = one_minus_mu * v.delta_y / 2;

  if (p.d_squared <= 0)
    v.caveats.push_back("D^2 <= 0: D cannot be nef and big");
  v.caveats.push_back("nefness and bigness of D are assumed, not checked");

  const bool d2_ok = p.d_squared > v.d_squared_threshold;
  const bool singular = v.kind.shape != GermShape::Smooth;

  if (!qlt.is_qlt) {
    // delta_y = 0: D^2 > 0 suffices and D.C >= 0 holds for nef D
    if (p.d_squared > 0) {
      v.outcome = Outcome::Free;
      v.path = FreePath::NotQuasiLogTerminal;
      v.reason = "not quasi-log-terminal (delta_y = 0) and D^2 > 0";
    } else {
      v.reason = "D^2 not strictly greater than 0";
    }
    return v;
  }

  const bool not_type_a = singular && (v.kind.shape == GermShape::Dn ||
                                       v.kind.shape == GermShape::EType);
  if (!d2_ok) {
    v.reason = "D^2 = " + to_string(p.d_squared) + " not strictly greater than (1-mu)^2 delta_y = " +
               to_string(v.d_squared_threshold);
    return v;
  }
  if (not_type_a) {
    v.outcome = Outcome::Free;
    v.path = FreePath::NotTypeA;
    v.reason = "singular point not of type A_n and D^2 > (1-mu)^2 delta_y";
    return v;
  }
  if (!p.min_dc) {
    v.reason = "min D.C not supplied; required for " + v.kind.name();
    return v;
  }
  if (*p.min_dc >= v.dc_threshold) {
    v.outcome = Outcome::Free;
    v.path = FreePath::CurveCondition;
    v.reason = "D^2 > (1-mu)^2 delta_y and D.C >= (1-mu) delta_y / 2";
    return v;
  }
  v.reason = "min D.C = " + to_string(*p.min_dc) + " below (1-mu) delta_y / 2 = " +
             to_string(v.dc_threshold);
  return v;
}

Verdict check_corollary(const DualGraph& g, const BoundaryData& d_rounding, const Rat& d_squared,
                        const std::optional<Rat>& min_dc) {
  for (const auto& c : d_rounding.curves)
    if (c.coefficient < 0 || c.coefficient >= 1)
      throw InvalidBoundary("ceil(D) - D must have coefficients in [0, 1), got " +
                            to_string(c.coefficient));
  auto v = check_freeness({g, d_rounding, d_squared, min_dc});
  v.system = "|K_Y + ceil(D)|";
  return v;
}

}  // namespace surfgerm
