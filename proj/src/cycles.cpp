#include "surfgerm/cycles.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "surfgerm/boundary.hpp"
#include "surfgerm/errors.hpp"
#include "surfgerm/etypes.hpp"

namespace surfgerm {

std::string GermKind::name() const {
  std::ostringstream os;
  switch (shape) {
    case GermShape::Smooth: os << "smooth"; break;
    case GermShape::An: os << "A_" << n; break;
    case GermShape::Dn: os << "D_" << n; break;
    case GermShape::EType: os << "E(row " << etype_row << ", m=" << m << ")"; break;
    case GermShape::LogTerminalOther: os << "log-terminal (other)"; break;
    case GermShape::NotLogTerminal: os << "not log-terminal"; break;
  }
  return os.str();
}

namespace {

void require_negative_definite(const IntersectionMatrix& m) {
  if (!is_negative_definite(m)) throw NotNegativeDefinite();
}

bool is_tree(const DualGraph& g) { return g.edge_count() + 1 == g.size(); }

// Arm of a star starting at the center's neighbor `first`, listed far->near.
std::vector<std::size_t> walk_arm(const DualGraph& g, std::size_t center, std::size_t first) {
  std::vector<std::size_t> arm{first};
  std::size_t prev = center;
  std::size_t cur = first;
  while (g.degree(cur) == 2) {
    std::size_t next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
    arm.push_back(cur);
  }
  std::reverse(arm.begin(), arm.end());  // far -> near
  return arm;
}

std::vector<long> weights_of(const DualGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<long> w;
  for (auto i : idx) w.push_back(g.weight(i));
  return w;
}

std::optional<GermKind> match_chain(const DualGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  const std::size_t n = g.size();
  if (n == 1) {
    GermKind k;
    k.shape = g.is_smooth_point() ? GermShape::Smooth : GermShape::An;
    k.n = 1;
    k.weights = {g.weight(0)};
    k.order = {0};
    return k;
  }
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) > 2) return std::nullopt;
    if (g.degree(i) == 1) ends.push_back(i);
  }
  // ends is sorted by input index; start from the lower one
  std::vector<std::size_t> order{ends.front()};
  std::size_t prev = n;
  std::size_t cur = ends.front();
  while (order.size() < n) {
    for (auto nb : g.neighbors(cur)) {
      if (nb != prev) {
        prev = cur;
        cur = nb;
        break;
      }
    }
    order.push_back(cur);
  }
  GermKind k;
  k.shape = GermShape::An;
  k.n = n;
  k.weights = weights_of(g, order);
  k.order = order;
  return k;
}

struct Star {
  std::size_t center;
  std::vector<std::vector<std::size_t>> arms;  // each far -> near
};

std::optional<Star> as_star(const DualGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  std::optional<std::size_t> center;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) > 3) return std::nullopt;
    if (g.degree(i) == 3) {
      if (center) return std::nullopt;
      center = i;
    }
  }
  if (!center) return std::nullopt;
  Star s{*center, {}};
  for (auto nb : g.neighbors(*center)) s.arms.push_back(walk_arm(g, *center, nb));
  return s;
}

bool is_fork(const DualGraph& g, const std::vector<std::size_t>& arm) {
  return arm.size() == 1 && g.weight(arm[0]) == 2;
}

std::optional<GermKind> match_d(const DualGraph& g, const Star& s) {
  // two single weight-2 leaves; the remaining arm plus the center is the chain
  std::vector<std::size_t> forks, others;
  for (std::size_t a = 0; a < 3; ++a) (is_fork(g, s.arms[a]) ? forks : others).push_back(a);
  if (forks.size() < 2) return std::nullopt;
  std::size_t chain_arm;
  if (forks.size() == 3) {
    // every arm is a 2-leaf: the one with the lowest input index is the chain
    chain_arm = 0;
    for (std::size_t a = 1; a < 3; ++a)
      if (s.arms[a][0] < s.arms[chain_arm][0]) chain_arm = a;
    forks.erase(std::find(forks.begin(), forks.end(), chain_arm));
  } else {
    chain_arm = others[0];
  }
  GermKind k;
  k.shape = GermShape::Dn;
  k.n = g.size();
  k.order = s.arms[chain_arm];
  k.order.push_back(s.center);
  k.weights = weights_of(g, k.order);
  std::vector<std::size_t> fk{s.arms[forks[0]][0], s.arms[forks[1]][0]};
  std::sort(fk.begin(), fk.end());
  k.order.insert(k.order.end(), fk.begin(), fk.end());
  return k;
}

std::optional<GermKind> match_e(const DualGraph& g, const Star& s) {
  // the weight-2 arm is a single leaf; the other two arms name the row
  for (std::size_t third = 0; third < 3; ++third) {
    if (!is_fork(g, s.arms[third])) continue;
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < 3; ++a)
      if (a != third) rest.push_back(a);
    for (const auto& fam : etype_families()) {
      for (int swap = 0; swap < 2; ++swap) {
        const auto& arm1 = s.arms[rest[swap]];
        const auto& arm2 = s.arms[rest[1 - swap]];
        if (weights_of(g, arm1) != fam.arm1 || weights_of(g, arm2) != fam.arm2) continue;
        GermKind k;
        k.shape = GermShape::EType;
        k.n = g.size();
        k.etype_row = fam.row;
        k.m = g.weight(s.center);
        k.order.push_back(s.center);
        k.order.insert(k.order.end(), arm1.begin(), arm1.end());
        k.order.insert(k.order.end(), arm2.rbegin(), arm2.rend());
        k.order.push_back(s.arms[third][0]);
        return k;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> input_order(const DualGraph& g) {
  std::vector<std::size_t> o(g.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
  return o;
}

GermKind classify_with(const DualGraph& g, const Cycle& a) {
  GermKind kind;
  if (auto c = match_chain(g)) {
    kind = *c;
  } else if (auto s = as_star(g)) {
    if (auto d = match_d(g, *s))
      kind = *d;
    else if (auto e = match_e(g, *s))
      kind = *e;
    else
      kind.shape = GermShape::LogTerminalOther;
  } else {
    kind.shape = GermShape::LogTerminalOther;
  }
  if (kind.order.empty()) kind.order = input_order(g);
  kind.n = g.size();

  if (std::any_of(a.coeffs.begin(), a.coeffs.end(), [](const Rat& x) { return x >= 1; }))
    kind.shape = GermShape::NotLogTerminal;
  kind.is_rational_double_point = kind.shape != GermShape::Smooth && a.is_zero();
  return kind;
}

Rat self_intersection_defect(const IntersectionMatrix& m, const Cycle& z, const Cycle& a) {
  Cycle v = z - a;
  return -intersect(m, v, v);
}

}  // namespace

Cycle fundamental_cycle(const DualGraph& g) {
  const auto m = build_intersection_matrix(g);
  require_negative_definite(m);
  const std::size_t n = g.size();
  std::vector<long> z(n, 1);
  for (;;) {
    std::optional<std::size_t> bump;
    for (std::size_t i = 0; i < n && !bump; ++i) {
      long dot = -g.weight(i) * z[i];
      for (auto j : g.neighbors(i)) dot += z[j];
      if (dot > 0) bump = i;
    }
    if (!bump) break;
    ++z[*bump];
  }
  Cycle out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = z[i];
  return out;
}

Cycle discrepancy_cycle(const DualGraph& g) {
  const auto m = build_intersection_matrix(g);
  require_negative_definite(m);
  Cycle rhs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) rhs[i] = 2 - g.weight(i);
  return solve_linear(m, rhs);
}

Rat delta_invariant(const DualGraph& g, const BoundaryData& boundary) {
  const auto qlt = quasi_log_terminal_check(g, boundary);
  if (!qlt.is_qlt) return Rat(0);
  const auto m = build_intersection_matrix(g);
  return self_intersection_defect(m, fundamental_cycle(g), discrepancy_cycle(g));
}

Rat arithmetic_genus(const DualGraph& g, const Cycle& z) {
  for (const auto& c : z.coeffs)
    if (!is_integer(c)) throw std::invalid_argument("arithmetic genus needs an integral cycle");
  const auto m = build_intersection_matrix(g);
  Rat zk = 0;
  for (std::size_t i = 0; i < g.size(); ++i) zk += z[i] * (g.weight(i) - 2);
  return (intersect(m, z, z) + zk) / 2 + 1;
}

GermKind classify(const DualGraph& g) { return classify_with(g, discrepancy_cycle(g)); }

DiscrepancyResult analyze(const DualGraph& g) {
  DiscrepancyResult r;
  r.delta_cycle = discrepancy_cycle(g);
  r.fundamental = fundamental_cycle(g);
  r.kind = classify_with(g, r.delta_cycle);
  r.delta_y = delta_invariant(g, BoundaryData{});
  return r;
}

}  // namespace surfgerm
