#pragma once

// Text and machine-readable (JSON) reports for the command-line front end.
// Rationals are serialized as "p/q" strings so no precision is lost.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfgerm/document.hpp"
#include "surfgerm/etypes.hpp"
#include "surfgerm/freeness.hpp"
#include "surfgerm/sweeps.hpp"

namespace surfgerm {

using nlohmann::ordered_json;

struct InvariantsReport {
  std::string kind;
  bool rational_double_point = false;
  std::vector<std::string> order;  // vertex ids in conventional numbering
  std::vector<std::string> ids;    // vertex ids in input order
  std::vector<Rat> fundamental;
  std::vector<Rat> discrepancy;
  Rat delta_y;
  std::optional<Rat> mu;
  bool quasi_log_terminal = false;
  Rat worst_coefficient;
  Rat arithmetic_genus;

  friend bool operator==(const InvariantsReport&, const InvariantsReport&) = default;
};

InvariantsReport compute_invariants(const GermDocument& doc);

ordered_json to_json(const InvariantsReport& r);
/// Inverse of to_json; throws ParseError on a malformed report.
InvariantsReport invariants_from_json(const ordered_json& j);
std::string render_text(const InvariantsReport& r);

std::string render_classify_text(const InvariantsReport& r);
ordered_json classify_json(const InvariantsReport& r);

struct MuReport {
  std::optional<Rat> mu;
  std::vector<std::string> ids;
  std::vector<Rat> excess;       // exceptional part of f^*B
  std::vector<Rat> z_minus_delta;
};
MuReport compute_mu(const GermDocument& doc);
ordered_json to_json(const MuReport& r);
std::string render_text(const MuReport& r);

struct FreenessReport {
  Verdict verdict;
  std::optional<Rat> mu_d;        // mu(D, y) when D components are given
  std::optional<Rat> lemma3_c;    // the constant c when D components are given
  std::optional<bool> integrality;
};
/// Throws MissingDData.
FreenessReport compute_freeness(const GermDocument& doc);
ordered_json to_json(const FreenessReport& r);
std::string render_text(const FreenessReport& r);

ordered_json to_json(const SuiteReport& r);
std::string render_text(const SuiteReport& r);

ordered_json to_json(const AppendixReport& r);
std::string render_text(const AppendixReport& r);

}  // namespace surfgerm
