#pragma once

// Property sweeps behind `verify continuants` and `verify lemmas`. Each
// trial is an independent pure computation on its own random stream; the
// parallel runner spreads trials over OpenMP threads and the serial runner
// is the reference it must agree with exactly.

#include <cstdint>
#include <string>
#include <vector>

namespace surfgerm {

enum class Exec { Serial, Parallel };

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // from the lowest-numbered failing trial
  bool passed() const { return failures == 0 && cases > 0; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Continuant conventions and recurrences, closed-form inverse entries and
/// discrepancies against the exact solver, the A_n and D_n bounds on
/// a_i + c_{i,i}, and delta_y = 2 - a_1 - a_n.
SuiteReport verify_continuants(std::size_t trials, std::uint64_t seed, Exec exec = Exec::Parallel);

/// mu < 1 on quasi-log-terminal instances, the delta_y bounds, Pa(Z) = 0,
/// and c <= 1/2 under the integrality hypothesis.
SuiteReport verify_lemmas(std::size_t trials, std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace surfgerm
