#pragma once

// The fifteen star-shaped log-terminal families (m; a,b,c; d,e; 2) and the
// verification of their tabulated a_i + c_{i,i} values.
//
// A family is a center of weight m joined to three arms. Arm weights are
// listed far-to-near: arm1 = (a,b,c), arm2 = (d,e), arm3 = (2).

#include <map>
#include <span>
#include <string>
#include <vector>

#include "surfgerm/dualgraph.hpp"
#include "surfgerm/rational.hpp"

namespace surfgerm {

/// One tabulated value p + q/x. Some printed cells admit more than one
/// reading; `readings` lists them in order of preference.
struct TableValue {
  struct Reading {
    Rat constant;
    Rat over_x;  // coefficient of 1/x
    std::string text;
    Rat at(const Rat& x) const { return constant + over_x / x; }
  };
  std::string printed;
  std::vector<Reading> readings;
};

struct ETypeFamily {
  int row = 0;
  std::vector<long> arm1;  // far -> near
  std::vector<long> arm2;  // far -> near
  long x_slope = 0;        // x = x_slope * m + x_offset
  long x_offset = 0;
  std::string notation;    // e.g. "(m;2,2;3)"
  /// Printed tuple: center; arm1 far->near; arm2 near->far; arm3.
  std::vector<TableValue> values;

  Rat x_at(long m) const { return Rat(x_slope * m + x_offset); }
};

/// Rows 1..15, in table order.
std::span<const ETypeFamily> etype_families();
const ETypeFamily& etype_family(int row);

struct ETypeSpec {
  int row = 0;
  long m = 2;
};

/// Star with center "c" (weight m), arm vertices "a1.k"/"a2.k" numbered
/// far-to-near from 1, and the weight-2 arm "a3.1". Throws InvalidM when
/// the graph is not negative definite or not log-terminal.
DualGraph build_etype_graph(const ETypeSpec& spec);

/// a_i + c_{i,i} for every vertex, keyed by vertex id; a_i from the
/// discrepancy cycle and c_{i,i} = -(A^-1)_{ii}.
std::map<std::string, Rat> etype_aci(const ETypeSpec& spec);

/// Ids of build_etype_graph's vertices in printed-tuple order under the
/// given arm orientations (true = far->near).
std::vector<std::string> tuple_order(const ETypeFamily& fam, bool arm1_far_to_near,
                                     bool arm2_far_to_near);

enum class CellStatus { Pass, Fail, Skipped };

struct CellResult {
  int row = 0;
  long m = 0;
  Rat x;
  CellStatus status = CellStatus::Pass;
  std::string detail;                         // skip reason / first mismatch
  std::string mismatch_vertex;                // empty when none
  std::vector<std::pair<std::string, Rat>> computed;  // tuple order
  std::vector<Rat> expected;                          // tuple order
  bool multiset_match = false;
  bool all_above_one = false;
  friend bool operator==(const CellResult&, const CellResult&) = default;
};

struct AppendixReport {
  long m_lo = 0;
  long m_hi = 0;
  std::string orientation;  // e.g. "center; arm1 far->near; arm2 near->far; arm3"
  std::vector<std::string> reading_notes;  // resolved multi-reading cells
  std::vector<CellResult> cells;           // ordered by (row, m)

  bool all_pass() const;
  friend bool operator==(const AppendixReport&, const AppendixReport&) = default;
  std::size_t count(CellStatus s) const;
};

/// Table under test. Defaults to the built-in families; a caller may pass
/// a modified copy (negative controls).
AppendixReport verify_appendix(long m_lo, long m_hi);
AppendixReport verify_appendix(long m_lo, long m_hi, std::span<const ETypeFamily> table);
/// Same computation on one thread; kept as the reference for the parallel
/// version.
AppendixReport verify_appendix_serial(long m_lo, long m_hi, std::span<const ETypeFamily> table);

}  // namespace surfgerm
