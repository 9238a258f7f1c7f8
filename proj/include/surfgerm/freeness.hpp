#pragma once

// Sufficient conditions for the adjoint system |M| (or |K_Y + ceil(D)|) to
// be free at the point. The criterion is one-sided: a negative outcome is
// "not determined", never "has a base point".

#include <optional>
#include <string>
#include <vector>

#include "surfgerm/boundary.hpp"
#include "surfgerm/cycles.hpp"
#include "surfgerm/dualgraph.hpp"

namespace surfgerm {

struct FreenessProblem {
  DualGraph graph;
  BoundaryData boundary;
  Rat d_squared;
  std::optional<Rat> min_dc;  // inf of D.C over curves through the point
};

enum class Outcome { Free, NotDetermined };

enum class FreePath {
  None,
  NotQuasiLogTerminal,  // delta_y = 0, any D^2 > 0
  NotTypeA,             // singular, not A_n: D^2 condition alone
  CurveCondition,       // D^2 and D.C conditions
};

struct Verdict {
  Outcome outcome = Outcome::NotDetermined;
  FreePath path = FreePath::None;
  std::string system = "|M|";
  GermKind kind;
  bool quasi_log_terminal = false;
  std::optional<Rat> mu;  // absent when undefined (far from log-terminal)
  Rat delta_y;
  Rat d_squared;
  std::optional<Rat> min_dc;
  Rat d_squared_threshold;  // (1 - mu)^2 delta_y, strict
  Rat dc_threshold;         // (1 - mu) delta_y / 2
  std::string reason;
  std::vector<std::string> caveats;
};

Verdict check_freeness(const FreenessProblem& p);

/// B = ceil(D) - D, given as curve germs with coefficients in [0, 1).
/// Throws InvalidBoundary otherwise.
Verdict check_corollary(const DualGraph& g, const BoundaryData& d_rounding, const Rat& d_squared,
                        const std::optional<Rat>& min_dc);

std::string to_string(Outcome o);
std::string to_string(FreePath p);

}  // namespace surfgerm
