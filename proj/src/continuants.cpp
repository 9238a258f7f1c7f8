#include "surfgerm/continuants.hpp"

#include <stdexcept>
#include <vector>

namespace surfgerm {

namespace {

Rat sign_pow(std::size_t k) { return (k % 2) ? Rat(-1) : Rat(1); }

// w[from..to) as a subsequence, with 1-based inclusive bounds clamped to
// the empty sequence.
WeightSeq sub(WeightSeq w, std::size_t first, std::size_t last) {
  if (first > last || first == 0 || last > w.size()) return {};
  return w.subspan(first - 1, last - first + 1);
}

void check_index(WeightSeq w, std::size_t i) {
  if (i < 1 || i > w.size()) throw std::invalid_argument("chain index out of range");
}

}  // namespace

Rat continuant_a(WeightSeq w) {
  // a_j = -w_j a_{j-1} - a_{j-2}, a_0 = 1, a_{-1} = 0
  BigInt prev2 = 0;
  BigInt prev = 1;
  for (long wj : w) {
    BigInt cur = -wj * prev - prev2;
    prev2 = prev;
    prev = cur;
  }
  return Rat(prev);
}

Rat continuant_d(WeightSeq w) {
  // Expansion along the first row, walking in from the far end:
  // d(w_j..w_k) = -w_j d(w_{j+1}..w_k) - d(w_{j+2}..w_k), seeded with
  // d() = 4 and a virtual d = -4 one step beyond the forks.
  BigInt prev2 = -4;
  BigInt prev = 4;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    BigInt cur = -*it * prev - prev2;
    prev2 = prev;
    prev = cur;
  }
  return Rat(prev);
}

Rat abs_continuant_a(WeightSeq w) { return sign_pow(w.size()) * continuant_a(w); }
Rat abs_continuant_d(WeightSeq w) { return sign_pow(w.size()) * continuant_d(w); }

Rat an_inverse_entry_closed(WeightSeq w, std::size_t i, std::size_t j) {
  check_index(w, i);
  check_index(w, j);
  const std::size_t n = w.size();
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  return sign_pow(i + j) * continuant_a(sub(w, 1, lo - 1)) * continuant_a(sub(w, hi + 1, n)) /
         continuant_a(w);
}

Rat an_discrepancy_closed(WeightSeq w, std::size_t i) {
  check_index(w, i);
  const std::size_t n = w.size();
  return 1 + (sign_pow(i + 1) * continuant_a(sub(w, i + 1, n)) +
              sign_pow(i + n) * continuant_a(sub(w, 1, i - 1))) /
                 continuant_a(w);
}

Rat an_aci(WeightSeq w, std::size_t i) {
  check_index(w, i);
  const std::size_t n = w.size();
  const Rat left = abs_continuant_a(sub(w, 1, i - 1));
  const Rat right = abs_continuant_a(sub(w, i + 1, n));
  return 1 + ((left - 1) * (right - 1) - 1) / abs_continuant_a(w);
}

Rat an_aci_signed(WeightSeq w, std::size_t i) {
  // c_{i,i} = -(A^-1)_{ii}
  return an_discrepancy_closed(w, i) - an_inverse_entry_closed(w, i, i);
}

Rat dn_inverse_entry_closed(WeightSeq chain, std::size_t i, std::size_t j) {
  const std::size_t k = chain.size();  // n - 2
  const std::size_t n = k + 2;
  if (k == 0 || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("D-shape index out of range");
  const Rat det = continuant_d(chain);
  if (i > j) std::swap(i, j);  // symmetric
  if (j <= k)
    return sign_pow(i + j) * continuant_a(sub(chain, 1, i - 1)) *
           continuant_d(sub(chain, j + 1, k)) / det;
  if (i <= k)  // j is a fork
    return sign_pow(i + n - 1) * Rat(-2) * continuant_a(sub(chain, 1, i - 1)) / det;
  if (i == j) {
    std::vector<long> ext(chain.begin(), chain.end());
    ext.push_back(2);
    return continuant_a(ext) / det;
  }
  return continuant_a(sub(chain, 1, k - 1)) / det;  // the two forks
}

DnValues dn_closed(WeightSeq chain, std::size_t i) {
  const std::size_t k = chain.size();
  const std::size_t n = k + 2;
  if (k == 0) throw std::invalid_argument("D-shape needs a nonempty chain");
  if (i < 1 || i > n) throw std::invalid_argument("D-shape index out of range");
  const Rat abs_det = abs_continuant_d(chain);
  if (i <= k) {
    const Rat tail = abs_continuant_d(sub(chain, i + 1, k));
    return {1 - tail / abs_det, 1 + tail * (abs_continuant_a(sub(chain, 1, i - 1)) - 1) / abs_det};
  }
  return {Rat(1, 2) - 2 / abs_det, 1 + (abs_continuant_a(sub(chain, 1, k - 1)) - 2) / abs_det};
}

}  // namespace surfgerm
