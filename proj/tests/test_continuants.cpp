#include <doctest.h>

#include "oracles.hpp"
#include "surfgerm/continuants.hpp"
#include "surfgerm/cycles.hpp"

using namespace surfgerm;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }

using W = std::vector<long>;

Rat oracle_a(const W& w) { return w.empty() ? Rat(1) : oracle::det(oracle::matrix(DualGraph::chain(w))); }
Rat oracle_d(const W& w) { return oracle::det(oracle::matrix(DualGraph::d_shape(w))); }

}  // namespace

TEST_CASE("continuant conventions and small values") {
  CHECK(continuant_a(W{}) == 1);
  for (long w = 2; w <= 10; ++w) {
    CHECK(continuant_a(W{w}) == -w);
    CHECK(continuant_d(W{w}) == -4 * w + 4);
  }
  CHECK(continuant_a(W{2, 3}) == 5);
  CHECK(oracle_a(W{2, 3}) == 5);
  CHECK(continuant_d(W{}) == 4);
  CHECK(continuant_d(W{2, 2}) == 4);
  CHECK(oracle::leibniz_det(oracle::matrix(DualGraph::d_shape(W{2, 2}))) == 4);
}

TEST_CASE("chain closed forms on examples") {
  for (long w = 2; w <= 10; ++w) {
    CHECK(an_inverse_entry_closed(W{w}, 1, 1) == q(-1, w));
    CHECK(an_discrepancy_closed(W{w}, 1) == 1 - q(2, w));
  }
  CHECK(an_inverse_entry_closed(W{2, 3}, 1, 1) == q(-3, 5));
  CHECK(an_inverse_entry_closed(W{2, 3}, 1, 2) == q(-1, 5));
  CHECK(an_discrepancy_closed(W{2, 3}, 1) == q(1, 5));
  CHECK(an_discrepancy_closed(W{2, 3}, 2) == q(2, 5));
  for (std::size_t i = 1; i <= 5; ++i) CHECK(an_discrepancy_closed(W{2, 2, 2, 2, 2}, i) == 0);
  CHECK(an_aci(W{2}, 1) == q(1, 2));
  CHECK(an_aci(W{2, 3}, 1) == q(4, 5));
  CHECK(q(1, 5) + q(3, 5) == q(4, 5));
  CHECK(an_aci(W{2, 2, 2}, 2) == 1);
}

TEST_CASE("D-shape closed forms on examples") {
  const W all2{2, 2};
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto v = dn_closed(all2, i);
    CHECK(v.a == 0);
    CHECK(v.aci == (i == 2 ? 2 : 1));  // the center has -(D^-1)_22 = 2
  }
  const W c{3, 2};
  const std::vector<Rat> want{q(1, 2), q(1, 2), q(1, 4), q(1, 4)};
  const auto solved = discrepancy_cycle(DualGraph::d_shape(c));
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(dn_closed(c, i).a == want[i - 1]);
    CHECK(solved[i - 1] == want[i - 1]);
  }
  CHECK(abs_continuant_d(W{2}) == 4);
  CHECK(abs_continuant_d(c) == 8);
  CHECK_THROWS_AS(dn_closed(W{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(dn_closed(c, 0), std::invalid_argument);
  CHECK_THROWS_AS(dn_closed(c, 5), std::invalid_argument);
}

TEST_CASE("property: continuant recurrences and identities") {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng(606, t);
    const W w = random_weights(rng, 1, 12);
    const std::size_t k = w.size();
    CHECK(continuant_a(w) == oracle_a(w));
    CHECK(continuant_d(w) == oracle_d(w));
    if (k >= 2) {
      const W head(w.begin(), w.end() - 1), head2(w.begin(), w.end() - 2);
      CHECK(continuant_a(w) == -w.back() * continuant_a(head) - continuant_a(head2));
    }
    W ext = w;
    ext.push_back(1);
    CHECK(continuant_d(w) == -4 * continuant_a(ext));
    const Rat sign = k % 2 ? -1 : 1;
    CHECK(sign * continuant_a(w) >= 1);
    CHECK(abs_continuant_a(w) == abs(continuant_a(w)));
    CHECK(abs_continuant_d(w) == abs(continuant_d(w)));
  }
}

TEST_CASE("property: chain closed forms agree with the exact solver") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(707, t);
    const W w = random_weights(rng, 1, 12);
    const auto g = DualGraph::chain(w);
    const auto m = build_intersection_matrix(g);
    const auto inv = *oracle::inverse(oracle::matrix(g));
    const auto a = discrepancy_cycle(g);
    const std::size_t n = w.size();
    const Rat det_abs = abs(oracle_a(w));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        CHECK(an_inverse_entry_closed(w, i, j) == inverse_entry(m, i - 1, j - 1));
        CHECK(an_inverse_entry_closed(w, i, j) == inv[i - 1][j - 1]);
      }
      CHECK(an_discrepancy_closed(w, i) == a[i - 1]);
      const Rat aci = a[i - 1] - inv[i - 1][i - 1];
      CHECK(an_aci(w, i) == aci);
      CHECK(an_aci_signed(w, i) == aci);
      if (i == 1 || i == n)
        CHECK(aci == 1 - 1 / det_abs);
      else
        CHECK(aci >= 1);
    }
    CHECK(2 - a[0] - a[n - 1] == analyze(g).delta_y);
  }
}

TEST_CASE("property: D-shape closed forms agree with the exact solver") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(808, t);
    const W c = random_d_chain(rng);
    const auto g = DualGraph::d_shape(c);
    const std::size_t n = g.size();
    const auto inv = *oracle::inverse(oracle::matrix(g));
    const auto a = discrepancy_cycle(g);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) CHECK(dn_inverse_entry_closed(c, i, j) == inv[i - 1][j - 1]);
      const auto v = dn_closed(c, i);
      CHECK(v.a == a[i - 1]);
      CHECK(v.aci == a[i - 1] - inv[i - 1][i - 1]);
      CHECK(v.aci >= 1);
    }
    CHECK(dn_closed(c, n - 1).a == dn_closed(c, n).a);
    CHECK(dn_closed(c, n - 1).aci == dn_closed(c, n).aci);
    CHECK(classify(g).shape == GermShape::Dn);
  }
}
