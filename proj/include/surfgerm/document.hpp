#pragma once

// Germ description files (JSON):
//
//   {
//     "vertices": [{"id": "1", "weight": 2}, ...],
//     "edges":    [["1", "2"], ...],
//     "boundary": [{"coeff": "1/2", "incidence": {"1": 1}, "label": "B1"}],
//     "d_data":   {"d_squared": "5", "min_dc": "2",
//                  "d_components": [ ...same shape as boundary... ]}
//   }
//
// "edges", "boundary" and "d_data" are optional, as are "label",
// "min_dc" (null means not supplied) and "d_components". Rationals are
// "p/q" or integer strings (bare JSON integers are accepted too). Unknown
// keys are rejected.

#include <optional>
#include <string>
#include <string_view>

#include "surfgerm/boundary.hpp"
#include "surfgerm/dualgraph.hpp"

namespace surfgerm {

struct DData {
  Rat d_squared;
  std::optional<Rat> min_dc;
  BoundaryData d_components;
};

struct GermDocument {
  DualGraph graph;
  BoundaryData boundary;
  std::optional<DData> d_data;
};

/// Throws ParseError whose location names the offending field.
GermDocument parse_germ_document(std::string_view text);
GermDocument load_germ_document(const std::string& path);

}  // namespace surfgerm
