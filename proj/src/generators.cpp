#include "surfgerm/generators.hpp"

#include <algorithm>

namespace surfgerm {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = engine_.max() - engine_.max() % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Rat Rng::proper_fraction(long max_den) {
  const long q = uniform(2, max_den);
  return make_rat(uniform(1, q - 1), q);
}

std::vector<long> random_weights(Rng& rng, std::size_t min_len, std::size_t max_len, long lo,
                                 long hi) {
  const auto n = static_cast<std::size_t>(
      rng.uniform(static_cast<long>(min_len), static_cast<long>(max_len)));
  std::vector<long> w(n);
  for (auto& x : w) x = rng.uniform(lo, hi);
  return w;
}

DualGraph random_chain(Rng& rng, std::size_t max_n) {
  return DualGraph::chain(random_weights(rng, 1, max_n));
}

std::vector<long> random_d_chain(Rng& rng, std::size_t max_n) {
  return random_weights(rng, 2, max_n - 2);
}

ETypeSpec random_etype(Rng& rng, long m_lo, long m_hi) {
  return {static_cast<int>(rng.uniform(1, 15)), rng.uniform(m_lo, m_hi)};
}

DualGraph random_log_terminal_germ(Rng& rng) {
  switch (rng.uniform(0, 9)) {
    case 0: return DualGraph::smooth_point();
    case 1:
    case 2:
    case 3: return random_chain(rng);
    case 4:
    case 5:
    case 6: return DualGraph::d_shape(random_d_chain(rng));
    default: return build_etype_graph(random_etype(rng));
  }
}

namespace {

CurveGerm random_curve(Rng& rng, const DualGraph& g, long max_den, std::size_t label) {
  CurveGerm c;
  c.coefficient = rng.proper_fraction(max_den);
  c.incidence.assign(g.size(), 0);
  const long hits = rng.uniform(1, 2);
  for (long h = 0; h < hits; ++h)
    c.incidence[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(g.size()) - 1))] +=
        rng.uniform(1, 2);
  c.label = "B" + std::to_string(label);
  return c;
}

}  // namespace

BoundaryData random_qlt_boundary(Rng& rng, const DualGraph& g, std::size_t max_curves,
                                 long max_den) {
  auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_curves)));
  for (; k > 0; --k) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      BoundaryData b;
      for (std::size_t i = 0; i < k; ++i) b.curves.push_back(random_curve(rng, g, max_den, i));
      if (quasi_log_terminal_check(g, b).is_qlt) return b;
    }
  }
  return {};
}

std::optional<Lemma3Instance> random_lemma3_instance(Rng& rng, int attempts) {
  Lemma3Instance inst{random_log_terminal_germ(rng), {}, {}, {}};
  const auto& g = inst.graph;
  inst.b_y = random_qlt_boundary(rng, g);
  inst.delta = analyze(g);
  const auto m = build_intersection_matrix(g);
  const Cycle b_exc = total_excess(g, inst.b_y);
  const Cycle& a = inst.delta.delta_cycle;
  const Cycle& z = inst.delta.fundamental;

  for (int attempt = 0; attempt < attempts; ++attempt) {
    // t = k Z + r, integral and >= 2
    const long k = rng.uniform(2, 4);
    Cycle d_exc(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rat t = k * z[j] + rng.uniform(0, 1);
      d_exc[j] = t - a[j] - b_exc[j];
    }
    // D_y must meet the exceptional curves with u = -A d' >= 0
    const Cycle u = -apply(m, d_exc);
    if (std::any_of(u.coeffs.begin(), u.coeffs.end(), [](const Rat& x) { return x < 0; })) continue;
    inst.d_y.curves.clear();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (u[j] == 0) continue;
      CurveGerm c;
      c.coefficient = u[j];
      c.incidence.assign(g.size(), 0);
      c.incidence[j] = 1;
      c.label = "D" + std::to_string(j);
      inst.d_y.curves.push_back(std::move(c));
    }
    if (inst.d_y.empty()) continue;
    return inst;
  }
  return std::nullopt;
}

}  // namespace surfgerm
