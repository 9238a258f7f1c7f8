#include "surfgerm/report.hpp"

#include <sstream>

#include "surfgerm/errors.hpp"

namespace surfgerm {

namespace {

std::string opt(const std::optional<Rat>& r) { return r ? to_string(*r) : "undefined"; }

ordered_json rat_or_null(const std::optional<Rat>& r) {
  return r ? ordered_json(to_string(*r)) : ordered_json(nullptr);
}

std::vector<Rat> coeffs(const Cycle& c) { return c.coeffs; }

Rat rat_at(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("/") + key, "expected a rational string");
  return parse_rat(j[key].get<std::string>());
}

}  // namespace

// ---------------------------------------------------------------------------
// invariants / classify

InvariantsReport compute_invariants(const GermDocument& doc) {
  const auto& g = doc.graph;
  const auto res = analyze(g);
  InvariantsReport r;
  r.kind = res.kind.name();
  r.rational_double_point = res.kind.is_rational_double_point;
  for (auto i : res.kind.order) r.order.push_back(g.id(i));
  for (std::size_t i = 0; i < g.size(); ++i) r.ids.push_back(g.id(i));
  r.fundamental = coeffs(res.fundamental);
  r.discrepancy = coeffs(res.delta_cycle);
  r.delta_y = delta_invariant(g, doc.boundary);
  try {
    r.mu = mu(g, doc.boundary);
  } catch (const std::domain_error&) {
  }
  const auto q = quasi_log_terminal_check(g, doc.boundary);
  r.quasi_log_terminal = q.is_qlt;
  r.worst_coefficient = q.worst_coefficient;
  r.arithmetic_genus = arithmetic_genus(g, res.fundamental);
  return r;
}

ordered_json to_json(const InvariantsReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["rational_double_point"] = r.rational_double_point;
  j["order"] = r.order;
  ordered_json vs = ordered_json::array();
  for (std::size_t i = 0; i < r.ids.size(); ++i)
    vs.push_back({{"id", r.ids[i]}, {"z", to_string(r.fundamental[i])}, {"a", to_string(r.discrepancy[i])}});
  j["vertices"] = vs;
  j["delta_y"] = to_string(r.delta_y);
  j["mu"] = rat_or_null(r.mu);
  j["quasi_log_terminal"] = r.quasi_log_terminal;
  j["worst_coefficient"] = to_string(r.worst_coefficient);
  j["arithmetic_genus"] = to_string(r.arithmetic_genus);
  return j;
}

InvariantsReport invariants_from_json(const ordered_json& j) {
  InvariantsReport r;
  try {
    r.kind = j.at("kind").get<std::string>();
    r.rational_double_point = j.at("rational_double_point").get<bool>();
    r.order = j.at("order").get<std::vector<std::string>>();
    for (const auto& v : j.at("vertices")) {
      r.ids.push_back(v.at("id").get<std::string>());
      r.fundamental.push_back(rat_at(v, "z"));
      r.discrepancy.push_back(rat_at(v, "a"));
    }
    r.delta_y = rat_at(j, "delta_y");
    if (!j.at("mu").is_null()) r.mu = rat_at(j, "mu");
    r.quasi_log_terminal = j.at("quasi_log_terminal").get<bool>();
    r.worst_coefficient = rat_at(j, "worst_coefficient");
    r.arithmetic_genus = rat_at(j, "arithmetic_genus");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/", e.what());
  }
  return r;
}

std::string render_text(const InvariantsReport& r) {
  std::ostringstream os;
  os << "kind:               " << r.kind << (r.rational_double_point ? " (rational double point)" : "")
     << "\n";
  os << "numbering:         ";
  for (const auto& id : r.order) os << " " << id;
  os << "\n";
  os << "vertex  Z  Delta_y\n";
  for (std::size_t i = 0; i < r.ids.size(); ++i)
    os << "  " << r.ids[i] << "  " << to_string(r.fundamental[i]) << "  " << to_string(r.discrepancy[i])
       << "\n";
  os << "delta_y:            " << to_string(r.delta_y) << "\n";
  os << "mu(B,y):            " << opt(r.mu) << "\n";
  os << "quasi-log-terminal: " << (r.quasi_log_terminal ? "yes" : "no")
     << " (max coefficient of Delta_y + B^exc = " << to_string(r.worst_coefficient) << ")\n";
  os << "Pa(Z):              " << to_string(r.arithmetic_genus) << "\n";
  return os.str();
}

std::string render_classify_text(const InvariantsReport& r) {
  std::ostringstream os;
  os << r.kind << (r.rational_double_point ? " (rational double point)" : "") << "\n";
  os << "numbering:";
  for (const auto& id : r.order) os << " " << id;
  os << "\n";
  return os.str();
}

ordered_json classify_json(const InvariantsReport& r) {
  return {{"kind", r.kind}, {"rational_double_point", r.rational_double_point}, {"order", r.order}};
}

// ---------------------------------------------------------------------------
// mu

MuReport compute_mu(const GermDocument& doc) {
  const auto& g = doc.graph;
  MuReport r;
  try {
    r.mu = mu(g, doc.boundary);
  } catch (const std::domain_error&) {
  }
  const Cycle ex = total_excess(g, doc.boundary);
  const Cycle gap = fundamental_cycle(g) - discrepancy_cycle(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.ids.push_back(g.id(i));
    r.excess.push_back(ex[i]);
    r.z_minus_delta.push_back(gap[i]);
  }
  return r;
}

ordered_json to_json(const MuReport& r) {
  ordered_json vs = ordered_json::array();
  for (std::size_t i = 0; i < r.ids.size(); ++i)
    vs.push_back({{"id", r.ids[i]},
                  {"boundary_excess", to_string(r.excess[i])},
                  {"z_minus_delta", to_string(r.z_minus_delta[i])}});
  return {{"mu", rat_or_null(r.mu)}, {"vertices", vs}};
}

std::string render_text(const MuReport& r) {
  std::ostringstream os;
  os << "mu(B,y): " << opt(r.mu) << "\n";
  os << "vertex  B^exc  Z-Delta_y\n";
  for (std::size_t i = 0; i < r.ids.size(); ++i)
    os << "  " << r.ids[i] << "  " << to_string(r.excess[i]) << "  " << to_string(r.z_minus_delta[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// freeness

FreenessReport compute_freeness(const GermDocument& doc) {
  if (!doc.d_data) throw MissingDData();
  const auto& d = *doc.d_data;
  FreenessReport r;
  r.verdict = check_freeness({doc.graph, doc.boundary, d.d_squared, d.min_dc});
  if (!d.d_components.empty()) {
    try {
      r.mu_d = mu(doc.graph, d.d_components);
    } catch (const std::domain_error&) {
    }
    const auto l3 = lemma3_constant(doc.graph, doc.boundary, d.d_components, analyze(doc.graph));
    r.lemma3_c = l3.c;
    r.integrality = l3.integrality_holds;
  }
  return r;
}

ordered_json to_json(const FreenessReport& r) {
  const auto& v = r.verdict;
  ordered_json j;
  j["outcome"] = to_string(v.outcome);
  j["path"] = to_string(v.path);
  j["system"] = v.system;
  j["reason"] = v.reason;
  j["kind"] = v.kind.name();
  j["quasi_log_terminal"] = v.quasi_log_terminal;
  j["mu"] = rat_or_null(v.mu);
  j["delta_y"] = to_string(v.delta_y);
  j["d_squared"] = to_string(v.d_squared);
  j["min_dc"] = rat_or_null(v.min_dc);
  j["d_squared_threshold"] = to_string(v.d_squared_threshold);
  j["dc_threshold"] = to_string(v.dc_threshold);
  j["caveats"] = v.caveats;
  if (r.mu_d) j["mu_D"] = to_string(*r.mu_d);
  if (r.lemma3_c) j["c"] = to_string(*r.lemma3_c);
  if (r.integrality) j["cartier_integrality"] = *r.integrality;
  return j;
}

std::string render_text(const FreenessReport& r) {
  const auto& v = r.verdict;
  std::ostringstream os;
  os << v.system << " at y: " << to_string(v.outcome);
  if (v.outcome == Outcome::Free)
    os << " via " << to_string(v.path);
  else
    os << ": " << v.reason;
  os << "\n";
  os << "kind:                 " << v.kind.name() << "\n";
  os << "quasi-log-terminal:   " << (v.quasi_log_terminal ? "yes" : "no") << "\n";
  os << "mu(B,y):              " << opt(v.mu) << "\n";
  os << "delta_y:              " << to_string(v.delta_y) << "\n";
  os << "D^2:                  " << to_string(v.d_squared) << "  (needs > " << to_string(v.d_squared_threshold)
     << ")\n";
  os << "min D.C:              " << (v.min_dc ? to_string(*v.min_dc) : std::string("not supplied")) << "  (needs >= " << to_string(v.dc_threshold)
     << " unless D_n/E-type)\n";
  if (r.mu_d) os << "mu(D,y):              " << to_string(*r.mu_d) << "\n";
  if (r.lemma3_c)
    os << "c:                    " << to_string(*r.lemma3_c)
       << (r.integrality.value_or(false) ? "" : "  (integrality hypothesis fails)") << "\n";
  for (const auto& c : v.caveats) os << "note: " << c << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// suites

ordered_json to_json(const SuiteReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"first_failure", c.first_failure}});
  return {{"suite", r.suite}, {"seed", r.seed}, {"trials", r.trials}, {"passed", r.all_pass()}, {"checks", checks}};
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ", " << r.trials << " trials, seed " << r.seed << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed() ? "  PASS  " : "  FAIL  ") << c.name << "  (" << c.cases << " cases";
    if (c.failures) os << ", " << c.failures << " failures; " << c.first_failure;
    os << ")\n";
  }
  os << (r.all_pass() ? "all checks passed\n" : "FAILED\n");
  return os.str();
}

namespace {

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "pass";
    case CellStatus::Fail: return "fail";
    case CellStatus::Skipped: return "skipped";
  }
  return "fail";
}

}  // namespace

ordered_json to_json(const AppendixReport& r) {
  ordered_json cells = ordered_json::array();
  for (const auto& c : r.cells) {
    ordered_json values = ordered_json::array();
    for (std::size_t k = 0; k < c.computed.size(); ++k)
      values.push_back({{"vertex", c.computed[k].first},
                        {"computed", to_string(c.computed[k].second)},
                        {"table", k < c.expected.size() ? ordered_json(to_string(c.expected[k])) : ordered_json(nullptr)}});
    cells.push_back({{"row", c.row},
                     {"m", c.m},
                     {"x", to_string(c.x)},
                     {"status", status_name(c.status)},
                     {"detail", c.detail},
                     {"multiset_match", c.multiset_match},
                     {"all_above_one", c.all_above_one},
                     {"values", values}});
  }
  return {{"suite", "appendix"},
          {"m_range", {r.m_lo, r.m_hi}},
          {"orientation", r.orientation},
          {"readings", r.reading_notes},
          {"passed", r.all_pass()},
          {"pass", r.count(CellStatus::Pass)},
          {"fail", r.count(CellStatus::Fail)},
          {"skipped", r.count(CellStatus::Skipped)},
          {"cells", cells}};
}

std::string render_text(const AppendixReport& r) {
  std::ostringstream os;
  os << "appendix table, m = " << r.m_lo << ".." << r.m_hi << "\n";
  os << "tuple order: " << r.orientation << "\n";
  for (const auto& n : r.reading_notes) os << "reading: " << n << "\n";
  for (const auto& c : r.cells) {
    os << "  row " << c.row << " m=" << c.m << " x=" << to_string(c.x) << "  " << status_name(c.status);
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << r.count(CellStatus::Pass) << " pass, " << r.count(CellStatus::Fail) << " fail, "
     << r.count(CellStatus::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace surfgerm
