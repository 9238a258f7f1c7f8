#pragma once

// Closed forms for chains (A_n) and D-shapes (D_n) built from the
// continuants a(w_1..w_k) = det A(w_1..w_k) and d(w_1..w_k) = det D(w_1..w_k).
//
// Indices i, j are 1-based as in the conventional numbering: a chain is
// 1..n, a D-shape has chain vertices 1..n-2 and forks n-1, n.

#include <cstddef>
#include <span>
#include <utility>

#include "surfgerm/rational.hpp"

namespace surfgerm {

using WeightSeq = std::span<const long>;

/// det of the tridiagonal chain matrix; a() = 1.
Rat continuant_a(WeightSeq w);
/// det of the chain with two (-2)-forks on its last vertex; d() = 4.
Rat continuant_d(WeightSeq w);

/// |a(w)| = (-1)^k a(w) and |d(w)| = (-1)^k d(w) for weights >= 2.
Rat abs_continuant_a(WeightSeq w);
Rat abs_continuant_d(WeightSeq w);

/// (A^-1)_{ij} of the chain from the product of two sub-continuants.
Rat an_inverse_entry_closed(WeightSeq w, std::size_t i, std::size_t j);

/// a_i on a chain, signed form.
Rat an_discrepancy_closed(WeightSeq w, std::size_t i);

/// a_i + c_{i,i} on a chain, absolute-value form
///   1 + ((|a(w_1..w_{i-1})| - 1)(|a(w_{i+1}..w_n)| - 1) - 1) / |det A|.
Rat an_aci(WeightSeq w, std::size_t i);

/// Same quantity from the signed pieces: an_discrepancy_closed(w, i) -
/// an_inverse_entry_closed(w, i, i).
Rat an_aci_signed(WeightSeq w, std::size_t i);

/// (D^-1)_{ij} for chain weights w_1..w_{n-2}; i, j in 1..n.
Rat dn_inverse_entry_closed(WeightSeq chain, std::size_t i, std::size_t j);

struct DnValues {
  Rat a;    // a_i
  Rat aci;  // a_i + c_{i,i}
};

/// Closed-form (a_i, a_i + c_{i,i}) on the D-shape with chain weights
/// w_1..w_{n-2} (nonempty). Throws std::invalid_argument on an empty chain
/// or an index outside 1..n.
DnValues dn_closed(WeightSeq chain, std::size_t i);

}  // namespace surfgerm
