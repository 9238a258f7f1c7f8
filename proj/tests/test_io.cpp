#include <doctest.h>

#include <string>

#include "surfgerm/document.hpp"
#include "surfgerm/errors.hpp"
#include "surfgerm/report.hpp"

using namespace surfgerm;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }

std::string germ(const std::string& name) { return std::string(SURFGERM_DATA_DIR) + "/" + name; }

std::string parse_error_location(const std::string& text) {
  try {
    parse_germ_document(text);
  } catch (const ParseError& e) {
    return e.location;
  }
  return "(no error)";
}

}  // namespace

TEST_CASE("A_1(3) document") {
  const auto doc = load_germ_document(germ("a1_3.json"));
  const auto r = compute_invariants(doc);
  CHECK(r.kind == "A_1");
  CHECK(r.delta_y == q(4, 3));
  CHECK(r.discrepancy == std::vector<Rat>{q(1, 3)});
  CHECK(r.fundamental == std::vector<Rat>{q(1)});
  CHECK(r.arithmetic_genus == 0);
  CHECK(r.quasi_log_terminal);
  CHECK(render_classify_text(r).find("A_1") != std::string::npos);
}

TEST_CASE("smooth document with boundary") {
  const auto doc = load_germ_document(germ("smooth_boundary.json"));
  const auto r = compute_invariants(doc);
  CHECK(r.kind == "smooth");
  CHECK(r.delta_y == 4);
  // half the total multiplicity: (2 * 1/3 + 1 * 1/4) / 2
  CHECK(*r.mu == q(11, 24));
  const auto m = compute_mu(doc);
  CHECK(*m.mu == q(11, 24));
  CHECK(m.z_minus_delta == std::vector<Rat>{q(2)});
}

TEST_CASE("parse errors name the field") {
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":3}],
      "boundary":[{"coeff":"1/0","incidence":{"1":1}}]})") == "/boundary/0/coeff");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":3}],
      "boundary":[{"coeff":0.5,"incidence":{"1":1}}]})") == "/boundary/0/coeff");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":3}],
      "boundary":[{"coeff":"1/2","incidence":{"7":1}}]})") == "/boundary/0/incidence");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":"3"}]})") == "/vertices/0/weight");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":3}],"extra":1})") == "/extra");
  CHECK(parse_error_location(R"({"edges":[]})") == "/vertices");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":3}],
      "d_data":{"d_squared":"x"}})") == "/d_data/d_squared");
  CHECK(parse_error_location(R"({"vertices":[{"id":"1","weight":2},{"id":"2","weight":2}]})") == "/vertices");
  CHECK(parse_error_location("{not json") == "/");
  CHECK_THROWS_AS(load_germ_document(germ("does_not_exist.json")), ParseError);
}

TEST_CASE("optional sections") {
  const auto doc = parse_germ_document(R"({
    "vertices": [{"id": "1", "weight": 2}],
    "d_data": {"d_squared": 3, "min_dc": null,
               "d_components": [{"coeff": "2", "incidence": {"1": 1}}]}})");
  REQUIRE(doc.d_data);
  CHECK(doc.d_data->d_squared == 3);
  CHECK_FALSE(doc.d_data->min_dc);
  CHECK(doc.d_data->d_components.curves.size() == 1);
  CHECK(doc.boundary.empty());
}

TEST_CASE("invariants report round trip") {
  for (const char* name : {"a1_3.json", "a2_23.json", "d4.json", "e_row3_m2.json", "smooth_boundary.json",
                           "star4_not_lt.json"}) {
    const auto r = compute_invariants(load_germ_document(germ(name)));
    const std::string text = to_json(r).dump();
    CHECK(invariants_from_json(ordered_json::parse(text)) == r);
    CHECK(to_json(compute_invariants(load_germ_document(germ(name)))).dump() == text);
  }
  CHECK_THROWS_AS(invariants_from_json(ordered_json::parse(R"({"kind": 3})")), ParseError);
}

TEST_CASE("freeness documents") {
  const auto smooth = compute_freeness(load_germ_document(germ("smooth.json")));
  CHECK(smooth.verdict.outcome == Outcome::Free);
  const auto text = render_text(smooth);
  CHECK(text.find("Free") != std::string::npos);
  CHECK(text.find("needs > 4") != std::string::npos);
  CHECK(text.find("needs >= 2") != std::string::npos);

  const auto eq = render_text(compute_freeness(load_germ_document(germ("a1_2_equality.json"))));
  CHECK(eq.find("NotDetermined: D^2 = 2 not strictly greater") != std::string::npos);

  const auto d4 = render_text(compute_freeness(load_germ_document(germ("d4.json"))));
  CHECK(d4.find("Free via non-A_n clause") != std::string::npos);
  CHECK(d4.find("not supplied") != std::string::npos);

  const auto a2 = compute_freeness(load_germ_document(germ("a2_23.json")));
  CHECK(*a2.mu_d == q(2, 3));
  CHECK(*a2.lemma3_c == q(5, 12));
  CHECK_FALSE(*a2.integrality);
  CHECK(to_json(a2)["c"] == "5/12");

  CHECK_THROWS_AS(compute_freeness(load_germ_document(germ("a1_3.json"))), MissingDData);
}

TEST_CASE("suite and appendix reports serialize") {
  SuiteReport s{"demo", 7, 3, {CheckResult{"one", 3, 0, ""}, CheckResult{"two", 3, 1, "trial 2: boom"}}};
  const auto j = to_json(s);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][1]["first_failure"] == "trial 2: boom");
  CHECK(render_text(s).find("FAIL") != std::string::npos);

  const auto a = verify_appendix(2, 2);
  const auto ja = to_json(a);
  CHECK(ja["passed"] == true);
  CHECK(render_text(a).find("row 15 m=2") != std::string::npos);
}
