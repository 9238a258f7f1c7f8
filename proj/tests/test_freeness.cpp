#include <doctest.h>

#include "freeness_grid.hpp"
#include "surfgerm/errors.hpp"
#include "surfgerm/etypes.hpp"
#include "surfgerm/freeness.hpp"
#include "surfgerm/generators.hpp"

using namespace surfgerm;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }

DualGraph a1(long w) {
  const std::vector<long> one{w};
  return DualGraph::chain(one);
}

DualGraph four_armed_star() {
  return DualGraph({{"c", 5}, {"l1", 2}, {"l2", 2}, {"l3", 2}, {"l4", 2}},
                   {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
}

BoundaryData through(const DualGraph& g, const Rat& coeff) {
  return BoundaryData{{make_curve(g, coeff, {{g.id(0), 1}})}};
}

}  // namespace

TEST_CASE("worked examples") {
  const auto smooth = check_freeness({DualGraph::smooth_point(), {}, q(5), q(2)});
  CHECK(smooth.outcome == Outcome::Free);
  CHECK(smooth.path == FreePath::CurveCondition);
  CHECK(*smooth.mu == 0);
  CHECK(smooth.delta_y == 4);
  CHECK(smooth.d_squared_threshold == 4);
  CHECK(smooth.dc_threshold == 2);

  const auto rdp = check_freeness({a1(2), {}, q(2), std::nullopt});
  CHECK(rdp.outcome == Outcome::NotDetermined);
  CHECK(rdp.delta_y == 2);
  CHECK(rdp.reason.find("not strictly greater") != std::string::npos);

  const std::vector<long> c{2, 2};
  const auto d4 = check_freeness({DualGraph::d_shape(c), {}, q(5, 2), std::nullopt});
  CHECK(d4.outcome == Outcome::Free);
  CHECK(d4.path == FreePath::NotTypeA);
  CHECK(d4.delta_y == 2);

  const auto star = check_freeness({four_armed_star(), {}, q(1, 10), std::nullopt});
  CHECK(star.outcome == Outcome::Free);
  CHECK(star.path == FreePath::NotQuasiLogTerminal);
  CHECK(star.delta_y == 0);
}

TEST_CASE("curve condition edge cases") {
  const auto missing = check_freeness({DualGraph::smooth_point(), {}, q(5), std::nullopt});
  CHECK(missing.outcome == Outcome::NotDetermined);
  CHECK(missing.reason.find("min D.C not supplied") != std::string::npos);

  const auto low = check_freeness({DualGraph::smooth_point(), {}, q(5), q(199, 100)});
  CHECK(low.outcome == Outcome::NotDetermined);
  CHECK(low.reason.find("below") != std::string::npos);

  // A_n needs the curve condition even when D^2 is large.
  const std::vector<long> w{2, 3};
  const auto an = check_freeness({DualGraph::chain(w), {}, q(100), std::nullopt});
  CHECK(an.outcome == Outcome::NotDetermined);
  const auto en = check_freeness({build_etype_graph({3, 2}), {}, q(100), std::nullopt});
  CHECK(en.outcome == Outcome::Free);
  // ... but not when D^2 is too small.
  const auto en_small = check_freeness({build_etype_graph({3, 2}), {}, q(1, 100), q(100)});
  CHECK(en_small.outcome == Outcome::NotDetermined);

  const auto neg = check_freeness({four_armed_star(), {}, q(0), std::nullopt});
  CHECK(neg.outcome == Outcome::NotDetermined);
  CHECK_FALSE(neg.caveats.empty());
}

TEST_CASE("corollary examples") {
  const auto integral = check_corollary(a1(3), {}, q(2), q(1));
  CHECK(integral.system == "|K_Y + ceil(D)|");
  const auto plain = check_freeness({a1(3), {}, q(2), q(1)});
  CHECK(integral.outcome == plain.outcome);
  CHECK(integral.d_squared_threshold == plain.d_squared_threshold);

  const auto s = DualGraph::smooth_point();
  const auto vs = check_corollary(s, through(s, q(1, 2)), q(3), q(3, 2));
  CHECK(*vs.mu == q(1, 4));
  CHECK(vs.d_squared_threshold == q(9, 4));
  CHECK(vs.dc_threshold == q(3, 2));
  CHECK(vs.outcome == Outcome::Free);
  CHECK(check_corollary(s, through(s, q(1, 2)), q(9, 4), q(3, 2)).outcome == Outcome::NotDetermined);

  const auto va = check_corollary(a1(3), through(a1(3), q(1, 2)), q(1), q(1));
  CHECK(*va.mu == q(1, 4));
  CHECK(va.delta_y == q(4, 3));
  CHECK(va.d_squared_threshold == q(3, 4));

  CHECK_THROWS_AS(check_corollary(s, through(s, q(1)), q(3), q(2)), InvalidBoundary);
}

TEST_CASE("property: grid monotonicity and the decision rule") {
  std::vector<grid::Germ> germs{
      {"smooth", DualGraph::smooth_point(), {}},
      {"A_1(2)", a1(2), {}},
      {"A_1(3)+B", a1(3), through(a1(3), q(1, 2))},
      {"D_4", DualGraph::d_shape(std::vector<long>{2, 2}), {}},
      {"E row 3", build_etype_graph({3, 2}), {}},
      {"star", four_armed_star(), {}},
  };
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng(1201, t);
    auto g = random_log_terminal_germ(rng);
    auto b = random_qlt_boundary(rng, g);
    germs.push_back({"random " + std::to_string(t), std::move(g), std::move(b)});
  }
  for (const auto& g : germs) {
    const auto r = grid::run(g);
    INFO(r.first_problem);
    CHECK(r.cells == 110);
    CHECK(r.rule_mismatches == 0);
    CHECK(r.monotonicity_violations == 0);
  }
}

TEST_CASE("property: a larger boundary never raises the thresholds") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(1301, t);
    const auto g = random_log_terminal_germ(rng);
    const auto b = random_qlt_boundary(rng, g);
    Rat prev_d2 = -1, prev_dc = -1;
    for (const Rat& s : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
      BoundaryData bs = b;
      for (auto& c : bs.curves) c.coefficient *= s;
      if (s == 0) bs.curves.clear();
      const auto v = check_freeness({g, bs, q(1), std::nullopt});
      if (prev_d2 >= 0) {
        CHECK(v.d_squared_threshold <= prev_d2);
        CHECK(v.dc_threshold <= prev_dc);
      }
      prev_d2 = v.d_squared_threshold;
      prev_dc = v.dc_threshold;
    }
  }
}

TEST_CASE("names") {
  CHECK(to_string(Outcome::Free) == "Free");
  CHECK(to_string(Outcome::NotDetermined) == "NotDetermined");
}
