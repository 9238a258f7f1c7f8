#include "surfgerm/sweeps.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "surfgerm/boundary.hpp"
#include "surfgerm/continuants.hpp"
#include "surfgerm/cycles.hpp"
#include "surfgerm/generators.hpp"

namespace surfgerm {

bool SuiteReport::all_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  template <class Msg>
  void check(bool ok, Msg&& msg) {
    ++cases;
    if (!ok && failures++ == 0) first = msg();
  }
};

using Trial = std::function<void(Rng&, std::vector<Tally>&)>;

std::string seq(std::span<const long> w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

void run_one(const Trial& fn, std::uint64_t seed, std::size_t t, std::vector<Tally>& out) {
  Rng rng(seed, t);
  try {
    fn(rng, out);
  } catch (const std::exception& e) {
    out.back().check(false, [&] { return std::string("exception: ") + e.what(); });
  }
}

// The last name is reserved for exceptions escaping a trial.
SuiteReport run_suite(std::string suite, std::vector<std::string> names, std::size_t trials,
                      std::uint64_t seed, Exec exec, const Trial& fn) {
  names.push_back("no exceptions");
  std::vector<std::vector<Tally>> per(trials, std::vector<Tally>(names.size()));
  const auto n = static_cast<long>(trials);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) run_one(fn, seed, static_cast<std::size_t>(t), per[t]);
  } else {
    for (long t = 0; t < n; ++t) run_one(fn, seed, static_cast<std::size_t>(t), per[t]);
  }

  SuiteReport rep{std::move(suite), seed, trials, {}};
  for (std::size_t c = 0; c < names.size(); ++c) {
    CheckResult r;
    r.name = names[c];
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& tl = per[t][c];
      r.cases += tl.cases;
      if (tl.failures && r.failures == 0) r.first_failure = "trial " + std::to_string(t) + ": " + tl.first;
      r.failures += tl.failures;
    }
    rep.checks.push_back(std::move(r));
  }
  // the exception check passes vacuously when nothing was thrown
  auto& ex = rep.checks.back();
  if (ex.failures == 0) ex.cases = trials;
  return rep;
}

enum ContCheck {
  kConventions,
  kRecurrence,
  kDIdentity,
  kSignPattern,
  kInverseEntries,
  kDiscrepancy,
  kAci,
  kProp1,
  kDeltaChain,
  kDnInverse,
  kProp2,
  kContCount
};

void continuant_trial(Rng& rng, std::vector<Tally>& t) {
  t[kConventions].check(continuant_a({}) == 1 && continuant_d({}) == 4,
                        [] { return std::string("a() or d() convention broken"); });

  // ---- chains
  const auto w = random_weights(rng, 1, 12);
  const auto g = DualGraph::chain(w);
  const auto m = build_intersection_matrix(g);
  const std::size_t n = w.size();
  const std::span<const long> ws(w);

  t[kRecurrence].check(continuant_a(ws) == determinant(m),
                       [&] { return "a" + seq(w) + " differs from det A"; });
  for (std::size_t j = 1; j <= n; ++j) {
    const Rat lhs = continuant_a(ws.first(j));
    const Rat rhs = -w[j - 1] * continuant_a(ws.first(j - 1)) -
                    (j >= 2 ? continuant_a(ws.first(j - 2)) : Rat(0));
    t[kRecurrence].check(lhs == rhs, [&] { return "recurrence fails at j=" + std::to_string(j) + " for " + seq(w); });
  }
  t[kSignPattern].check(abs_continuant_a(ws) >= 1 && abs_continuant_a(ws) == abs(continuant_a(ws)),
                        [&] { return "(-1)^n a" + seq(w) + " < 1"; });

  const Cycle a = discrepancy_cycle(g);
  const Rat abs_det = abs(determinant(m));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j)
      t[kInverseEntries].check(an_inverse_entry_closed(ws, i, j) == inverse_entry(m, i - 1, j - 1), [&] {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") of " + seq(w);
      });
    t[kDiscrepancy].check(an_discrepancy_closed(ws, i) == a[i - 1],
                          [&] { return "a_" + std::to_string(i) + " of " + seq(w); });
    const Rat solver_aci = a[i - 1] - inverse_entry(m, i - 1, i - 1);
    const Rat closed = an_aci(ws, i);
    t[kAci].check(closed == solver_aci && closed == an_aci_signed(ws, i),
                  [&] { return "a_i + c_ii at i=" + std::to_string(i) + " of " + seq(w); });
    if (i == 1 || i == n)
      t[kProp1].check(solver_aci == 1 - 1 / abs_det,
                      [&] { return "endpoint " + std::to_string(i) + " of " + seq(w) + " != 1 - 1/|det|"; });
    else
      t[kProp1].check(solver_aci >= 1,
                      [&] { return "interior " + std::to_string(i) + " of " + seq(w) + " below 1"; });
  }
  t[kDeltaChain].check(delta_invariant(g, {}) == 2 - a[0] - a[n - 1],
                       [&] { return "delta != 2 - a_1 - a_n on " + seq(w); });

  // ---- D-shapes
  const auto c = random_d_chain(rng);
  const std::span<const long> cs(c);
  const auto dg = DualGraph::d_shape(c);
  const auto dm = build_intersection_matrix(dg);
  const std::size_t dn = dg.size();

  std::vector<long> c1(c);
  c1.push_back(1);
  t[kDIdentity].check(continuant_d(cs) == -4 * continuant_a(c1) && continuant_d(cs) == determinant(dm),
                      [&] { return "d" + seq(c) + " identity"; });
  t[kSignPattern].check(abs_continuant_d(cs) == abs(continuant_d(cs)),
                        [&] { return "sign of d" + seq(c); });

  const Cycle da = discrepancy_cycle(dg);
  for (std::size_t i = 1; i <= dn; ++i) {
    for (std::size_t j = 1; j <= dn; ++j)
      t[kDnInverse].check(dn_inverse_entry_closed(cs, i, j) == inverse_entry(dm, i - 1, j - 1), [&] {
        return "D entry (" + std::to_string(i) + "," + std::to_string(j) + ") of " + seq(c);
      });
    const auto closed = dn_closed(cs, i);
    const Rat solver_aci = da[i - 1] - inverse_entry(dm, i - 1, i - 1);
    t[kProp2].check(closed.a == da[i - 1] && closed.aci == solver_aci && closed.aci >= 1,
                    [&] { return "D vertex " + std::to_string(i) + " of " + seq(c); });
  }
  t[kProp2].check(dn_closed(cs, dn - 1).aci == dn_closed(cs, dn).aci && da[dn - 2] == da[dn - 1],
                  [&] { return "forks of " + seq(c) + " differ"; });
}

enum LemmaCheck {
  kLemma1,
  kLemma2,
  kDeltaRemark,
  kGenus,
  kDiscrepancyRange,
  kClassified,
  kLemma3,
  kLemma3Minimality,
  kLemmaCount
};

void lemma_trial(Rng& rng, std::vector<Tally>& t) {
  const DualGraph g = random_log_terminal_germ(rng);
  const auto res = analyze(g);
  const auto& kind = res.kind;
  const BoundaryData b = random_qlt_boundary(rng, g);

  const auto qlt = quasi_log_terminal_check(g, b);
  t[kLemma1].check(qlt.is_qlt && mu(g, b) < 1, [&] {
    return kind.name() + ": mu = " + to_string(mu(g, b)) + " with qlt=" + (qlt.is_qlt ? "1" : "0");
  });

  const Rat& delta = res.delta_y;
  bool ok;
  if (kind.shape == GermShape::Smooth)
    ok = delta == 4;
  else if (kind.is_rational_double_point)
    ok = delta == 2;
  else
    ok = delta > 0 && delta < 2;
  t[kLemma2].check(ok, [&] { return kind.name() + ": delta_y = " + to_string(delta); });

  const Rat delta_b = delta_invariant(g, b);
  t[kDeltaRemark].check(delta_b >= 0 && delta_b <= 4,
                        [&] { return kind.name() + " with boundary: delta_y = " + to_string(delta_b); });

  t[kGenus].check(arithmetic_genus(g, res.fundamental) == 0,
                  [&] { return kind.name() + ": Pa(Z) != 0"; });

  // The one-vertex weight-1 graph is a blow-up, not a minimal resolution, so
  // a = -1 there is outside the statement.
  if (!g.is_smooth_point()) {
    const bool range = std::all_of(res.delta_cycle.coeffs.begin(), res.delta_cycle.coeffs.end(),
                                   [](const Rat& x) { return x >= 0 && x < 1; });
    t[kDiscrepancyRange].check(range, [&] { return kind.name() + ": a_j outside [0, 1)"; });
  }
  t[kClassified].check(kind.shape != GermShape::LogTerminalOther && kind.shape != GermShape::NotLogTerminal,
                       [&] { return "log-terminal germ classified as " + kind.name(); });

  std::optional<Lemma3Instance> inst;
  for (int tries = 0; tries < 32 && !inst; ++tries) inst = random_lemma3_instance(rng);
  t[kLemma3].check(inst.has_value(), [] { return std::string("no instance with the integrality hypothesis generated"); });
  if (!inst) return;
  const auto l3 = lemma3_constant(inst->graph, inst->b_y, inst->d_y, inst->delta);
  t[kLemma3].check(l3.integrality_holds && l3.c > 0 && l3.c <= Rat(1, 2), [&] {
    return inst->delta.kind.name() + ": c = " + to_string(l3.c);
  });
  for (const auto& dc : inst->d_y.curves) {
    Rat b_i = 0;
    for (const auto& bc : inst->b_y.curves)
      if (!dc.label.empty() && bc.label == dc.label) b_i += bc.coefficient;
    t[kLemma3Minimality].check(b_i + l3.c * dc.coefficient <= 1,
                               [&] { return "b_i + c d_i > 1 on " + inst->delta.kind.name(); });
  }
}

}  // namespace

SuiteReport verify_continuants(std::size_t trials, std::uint64_t seed, Exec exec) {
  std::vector<std::string> names(kContCount);
  names[kConventions] = "a()=1, d()=4";
  names[kRecurrence] = "three-term recurrence and det A";
  names[kDIdentity] = "d(w)=-4a(w,1) and det D";
  names[kSignPattern] = "sign pattern (-1)^k a >= 1";
  names[kInverseEntries] = "A_n closed inverse entries";
  names[kDiscrepancy] = "A_n closed discrepancies";
  names[kAci] = "A_n closed a_i+c_ii";
  names[kProp1] = "chain a_i+c_ii >= 1, = 1 - 1/|det| at ends";
  names[kDeltaChain] = "delta_y = 2 - a_1 - a_n";
  names[kDnInverse] = "D_n closed inverse entries";
  names[kProp2] = "D_n closed a_i+c_ii >= 1";
  return run_suite("continuants", names, trials, seed, exec, continuant_trial);
}

SuiteReport verify_lemmas(std::size_t trials, std::uint64_t seed, Exec exec) {
  std::vector<std::string> names(kLemmaCount);
  names[kLemma1] = "mu(B,y) < 1";
  names[kLemma2] = "0 < delta_y < 2, RDP 2, smooth 4";
  names[kDeltaRemark] = "0 <= delta_y <= 4";
  names[kGenus] = "Pa(Z) = 0";
  names[kDiscrepancyRange] = "0 <= a_j < 1 (minimal resolutions)";
  names[kClassified] = "log-terminal germs classified";
  names[kLemma3] = "D-curve constant c <= 1/2";
  names[kLemma3Minimality] = "b_i + c d_i <= 1";
  return run_suite("lemmas", names, trials, seed, exec, lemma_trial);
}

}  // namespace surfgerm
