#pragma once

// Seeded random instances for the property sweeps. Every trial draws from
// its own stream (seed, trial index), so results do not depend on how the
// trials are scheduled across threads.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "surfgerm/boundary.hpp"
#include "surfgerm/cycles.hpp"
#include "surfgerm/dualgraph.hpp"
#include "surfgerm/etypes.hpp"

namespace surfgerm {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  /// Uniform in [lo, hi], by rejection (portable across standard libraries).
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with 2 <= q <= max_den and 1 <= p < q.
  Rat proper_fraction(long max_den);

 private:
  std::mt19937_64 engine_;
};

/// Weights in [lo, hi]; length in [min_len, max_len].
std::vector<long> random_weights(Rng& rng, std::size_t min_len, std::size_t max_len, long lo = 2,
                                 long hi = 10);

/// Chain with 1..max_n vertices, weights 2..10.
DualGraph random_chain(Rng& rng, std::size_t max_n = 12);
/// D-shape with chain length 2..max_n-2 (so n >= 4), weights 2..10.
std::vector<long> random_d_chain(Rng& rng, std::size_t max_n = 12);
ETypeSpec random_etype(Rng& rng, long m_lo = 2, long m_hi = 10);

/// Smooth point, chain, D-shape or E-type star, all log-terminal.
DualGraph random_log_terminal_germ(Rng& rng);

/// Up to max_curves curves with coefficients p/q (q <= max_den); retried
/// until quasi-log-terminal, falling back to fewer curves. Curves are
/// labelled "B0", "B1", ...
BoundaryData random_qlt_boundary(Rng& rng, const DualGraph& g, std::size_t max_curves = 4,
                                 long max_den = 12);

struct Lemma3Instance {
  DualGraph graph;
  BoundaryData b_y;
  BoundaryData d_y;
  DiscrepancyResult delta;
};

/// A quasi-log-terminal (g, B) plus D_y whose exceptional part satisfies
/// d'_j + a_j + b'_j = t_j with integers t_j >= 2 (the Cartier hypothesis).
/// D_y is realized by curves meeting a single exceptional curve each.
/// Returns nullopt when no admissible t is found within the attempt budget.
std::optional<Lemma3Instance> random_lemma3_instance(Rng& rng, int attempts = 64);

}  // namespace surfgerm
