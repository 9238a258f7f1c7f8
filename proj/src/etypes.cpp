#include "surfgerm/etypes.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surfgerm/cycles.hpp"
#include "surfgerm/errors.hpp"

namespace surfgerm {

namespace {

TableValue::Reading reading(long c_num, long c_den, long q_num, long q_den, std::string text) {
  return {make_rat(c_num, c_den), make_rat(q_num, q_den), std::move(text)};
}

// One-reading cell: constant c_num/c_den plus (q_num/q_den)/x.
TableValue V(std::string printed, long c_num, long c_den, long q_num, long q_den) {
  std::ostringstream text;
  text << c_num;
  if (c_den != 1) text << "/" << c_den;
  text << " + " << q_num << "/(" << (q_den == 1 ? "" : std::to_string(q_den)) << "x)";
  TableValue v;
  v.readings.push_back(reading(c_num, c_den, q_num, q_den, text.str()));
  v.printed = std::move(printed);
  return v;
}

std::vector<ETypeFamily> make_families() {
  // Printed cells as typeset (\frac{p}{q} abbreviated). Tuple order:
  // center; arm1 far->near; arm2 near->far; arm3.
  const auto c5 = V("1+\\frac5x", 1, 1, 5, 1);
  const auto c11 = V("1+\\frac{11}x", 1, 1, 11, 1);
  const auto c29 = V("1+\\frac{29}x", 1, 1, 29, 1);
  const auto one_3x = V("1+\\frac1{3x}", 1, 1, 1, 3);
  const auto one_x = V("1+\\frac1x", 1, 1, 1, 1);
  const auto one_2x = V("1+\\frac1{2x}", 1, 1, 1, 2);
  const auto five_2x = V("1+\\frac5{2x}", 1, 1, 5, 2);
  const auto three_x = V("1+\\frac3x", 1, 1, 3, 1);
  const auto seven_x = V("1+\\frac7x", 1, 1, 7, 1);
  const auto r4_2x = V("\\frac43+\\frac2x", 4, 3, 2, 1);
  const auto r32_52x = V("\\frac32+\\frac5{2x}", 3, 2, 5, 2);
  const auto r32_6x = V("\\frac32+\\frac6x", 3, 2, 6, 1);
  const auto r43_14 = V("\\frac43+\\frac{14}{3x}", 4, 3, 14, 3);
  const auto r85_22 = V("\\frac85+\\frac{22}{5x}", 8, 5, 22, 5);
  const auto r95_51 = V("\\frac95+\\frac{51}{5x}", 9, 5, 51, 5);
  const auto r85_92 = V("\\frac85+\\frac{92}{5x}", 8, 5, 92, 5);
  const auto r43_38 = V("\\frac43+\\frac{38}{3x}", 4, 3, 38, 3);
  const auto r65_22 = V("\\frac65+\\frac{22}{5x}", 6, 5, 22, 5);
  const auto r75_51 = V("\\frac75+\\frac{51}{5x}", 7, 5, 51, 5);

  // Row 6 prints "\frac43+\frac14{3x}", which TeX renders as 4/3 + (1/4)(3x)
  // with the 3x set beside the fraction; the candidates are 4/3 + 14/(3x)
  // (the row-4 value) and 4/3 + 1/(12x).
  TableValue row6_cell;
  row6_cell.printed = "\\frac43+\\frac14{3x}";
  row6_cell.readings.push_back(reading(4, 3, 14, 3, "4/3 + 14/(3x)"));
  row6_cell.readings.push_back(reading(4, 3, 1, 12, "4/3 + 1/(12x)"));

  std::vector<ETypeFamily> f;
  f.push_back({1, {2, 2}, {2, 2}, 6, -11, "(m;2,2;2,2)", {c5, one_3x, r4_2x, r4_2x, one_3x, one_x}});
  f.push_back({2, {2, 2}, {3}, 2, -3, "(m;2,2;3)",
               {V("1+\\frac5{3x}", 1, 1, 5, 3), V("1+\\frac1{9x}", 1, 1, 1, 9),
                V("\\frac43+\\frac2{3x}", 4, 3, 2, 3), V("1+\\frac1{9x}", 1, 1, 1, 9), one_3x}});
  f.push_back({3, {3}, {3}, 6, -7, "(m;3;3)", {c5, one_3x, one_3x, one_x}});
  f.push_back({4, {2, 2, 2}, {2, 2}, 12, -23, "(m;2,2,2;2,2)",
               {c11, one_2x, r32_52x, r32_6x, r43_14, one_x, five_2x}});
  f.push_back({5, {2, 2, 2}, {3}, 12, -19, "(m;2,2,2;3)",
               {c11, one_2x, r32_52x, r32_6x, one_x, five_2x}});
  f.push_back({6, {4}, {2, 2}, 12, -17, "(m;4;2,2)", {c11, one_2x, row6_cell, one_x, five_2x}});
  f.push_back({7, {4}, {3}, 12, -13, "(m;4;3)", {c11, one_2x, one_x, five_2x}});
  f.push_back({8, {2, 2, 2, 2}, {2, 2}, 30, -59, "(m;2,2,2,2;2,2)",
               {c29, one_x, r85_22, r95_51, r85_92, r43_38, three_x, seven_x}});
  f.push_back({9, {2, 2, 2, 2}, {3}, 30, -49, "(m;2,2,2,2;3)",
               {c29, one_x, r85_22, r95_51, r85_92, three_x, seven_x}});
  f.push_back({10, {2, 3}, {2, 2}, 30, -47, "(m;2,3;2,2)",
               {c29, one_x, r65_22, r43_38, three_x, seven_x}});
  f.push_back({11, {2, 3}, {3}, 30, -37, "(m;2,3;3)", {c29, one_x, r65_22, three_x, seven_x}});
  f.push_back({12, {3, 2}, {2, 2}, 30, -53, "(m;3,2;2,2)",
               {c29, one_x, r75_51, r43_38, three_x, seven_x}});
  f.push_back({13, {3, 2}, {3}, 30, -43, "(m;3,2;3)", {c29, one_x, r75_51, three_x, seven_x}});
  f.push_back({14, {5}, {2, 2}, 30, -41, "(m;5;2,2)", {c29, one_x, r43_38, three_x, seven_x}});
  f.push_back({15, {5}, {3}, 30, -31, "(m;5;3)", {c29, one_x, three_x, seven_x}});
  return f;
}

std::string arm_id(int arm, std::size_t pos) { return "a" + std::to_string(arm) + "." + std::to_string(pos); }

}  // namespace

std::span<const ETypeFamily> etype_families() {
  static const std::vector<ETypeFamily> families = make_families();
  return families;
}

const ETypeFamily& etype_family(int row) {
  if (row < 1 || row > 15) throw InvalidM("E-type row must be in 1..15, got " + std::to_string(row));
  return etype_families()[static_cast<std::size_t>(row - 1)];
}

DualGraph build_etype_graph(const ETypeSpec& spec) {
  const auto& fam = etype_family(spec.row);
  if (spec.m < 2) throw InvalidM("center weight m must be at least 2");

  std::vector<DualGraph::Vertex> vs{{"c", spec.m}};
  std::vector<DualGraph::Edge> es;
  auto add_arm = [&](int arm, const std::vector<long>& weights) {
    for (std::size_t k = 0; k < weights.size(); ++k) {
      vs.push_back({arm_id(arm, k + 1), weights[k]});
      if (k > 0) es.emplace_back(arm_id(arm, k), arm_id(arm, k + 1));
    }
    es.emplace_back(arm_id(arm, weights.size()), "c");
  };
  add_arm(1, fam.arm1);
  add_arm(2, fam.arm2);
  add_arm(3, {2});
  DualGraph g(std::move(vs), es);

  if (!is_negative_definite(build_intersection_matrix(g)))
    throw InvalidM("row " + std::to_string(spec.row) + ", m=" + std::to_string(spec.m) +
                   ": graph is not negative definite");
  const Cycle a = discrepancy_cycle(g);
  if (std::any_of(a.coeffs.begin(), a.coeffs.end(), [](const Rat& v) { return v >= 1; }))
    throw InvalidM("row " + std::to_string(spec.row) + ", m=" + std::to_string(spec.m) +
                   ": germ is not log-terminal");
  return g;
}

std::map<std::string, Rat> etype_aci(const ETypeSpec& spec) {
  const DualGraph g = build_etype_graph(spec);
  const auto m = build_intersection_matrix(g);
  const Cycle a = discrepancy_cycle(g);
  std::map<std::string, Rat> out;
  for (std::size_t i = 0; i < g.size(); ++i) out[g.id(i)] = a[i] - inverse_entry(m, i, i);
  return out;
}

std::vector<std::string> tuple_order(const ETypeFamily& fam, bool arm1_far_to_near,
                                     bool arm2_far_to_near) {
  std::vector<std::string> ids{"c"};
  auto push_arm = [&](int arm, std::size_t len, bool far_to_near) {
    for (std::size_t k = 0; k < len; ++k) ids.push_back(arm_id(arm, far_to_near ? k + 1 : len - k));
  };
  push_arm(1, fam.arm1.size(), arm1_far_to_near);
  push_arm(2, fam.arm2.size(), arm2_far_to_near);
  ids.push_back(arm_id(3, 1));
  return ids;
}

// ---------------------------------------------------------------------------
// Appendix verification

bool AppendixReport::all_pass() const {
  return std::none_of(cells.begin(), cells.end(),
                      [](const CellResult& c) { return c.status == CellStatus::Fail; });
}

std::size_t AppendixReport::count(CellStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [s](const CellResult& c) { return c.status == s; }));
}

namespace {

struct Orientation {
  bool arm1_far_to_near;
  bool arm2_far_to_near;
  std::string describe() const {
    return std::string("center; arm1 ") + (arm1_far_to_near ? "far->near" : "near->far") +
           "; arm2 " + (arm2_far_to_near ? "far->near" : "near->far") + "; arm3";
  }
};

// Preferred first: the orientation suggested by the figure's labels.
constexpr std::array<std::pair<bool, bool>, 4> kOrientations{
    {{true, false}, {true, true}, {false, false}, {false, true}}};

struct CellInput {
  const ETypeFamily* fam;
  long m;
};

struct CellData {
  Rat x;
  std::optional<std::string> skip;
  std::map<std::string, Rat> aci;
};

// The per-cell kernel: independent of every other cell.
CellData compute_cell(const CellInput& in) {
  CellData d;
  d.x = in.fam->x_at(in.m);
  if (d.x <= 0) {
    d.skip = "x = " + to_string(d.x) + " is not positive";
    return d;
  }
  try {
    d.aci = etype_aci({in.fam->row, in.m});
  } catch (const InvalidM& e) {
    d.skip = e.what();
  }
  return d;
}

// Index of the first reading of `v` equal to `value` at x.
std::optional<std::size_t> matching_reading(const TableValue& v, const Rat& x, const Rat& value) {
  for (std::size_t r = 0; r < v.readings.size(); ++r)
    if (v.readings[r].at(x) == value) return r;
  return std::nullopt;
}

bool ordered_match(const ETypeFamily& fam, const CellData& d, const Orientation& o) {
  const auto ids = tuple_order(fam, o.arm1_far_to_near, o.arm2_far_to_near);
  if (ids.size() != fam.values.size()) return false;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (!matching_reading(fam.values[k], d.x, d.aci.at(ids[k]))) return false;
  return true;
}

bool multiset_match(const ETypeFamily& fam, const CellData& d) {
  std::vector<Rat> remaining;
  for (const auto& [id, v] : d.aci) remaining.push_back(v);
  if (remaining.size() != fam.values.size()) return false;
  for (const auto& tv : fam.values) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](const Rat& v) { return matching_reading(tv, d.x, v).has_value(); });
    if (it == remaining.end()) return false;
    remaining.erase(it);
  }
  return true;
}

AppendixReport assemble(long m_lo, long m_hi, const std::vector<CellInput>& inputs,
                        const std::vector<CellData>& data) {
  AppendixReport rep;
  rep.m_lo = m_lo;
  rep.m_hi = m_hi;

  // Orientation: the first one under which every computed cell matches;
  // failing that, the one matching the most cells.
  Orientation chosen{kOrientations[0].first, kOrientations[0].second};
  std::size_t best = 0;
  bool found = false;
  for (const auto& [o1, o2] : kOrientations) {
    Orientation o{o1, o2};
    std::size_t hits = 0;
    std::size_t total = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (data[k].skip) continue;
      ++total;
      if (ordered_match(*inputs[k].fam, data[k], o)) ++hits;
    }
    if (hits == total) {
      chosen = o;
      found = true;
      break;
    }
    if (hits > best) {
      best = hits;
      chosen = o;
    }
  }
  rep.orientation = chosen.describe() + (found ? "" : " (no orientation matches every cell)");

  // (row, value index) -> confirmed reading indices, for multi-reading cells
  std::map<std::pair<int, std::size_t>, std::set<std::size_t>> confirmed;

  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& fam = *inputs[k].fam;
    const auto& d = data[k];
    CellResult cell;
    cell.row = fam.row;
    cell.m = inputs[k].m;
    cell.x = d.x;
    if (d.skip) {
      cell.status = CellStatus::Skipped;
      cell.detail = *d.skip;
      rep.cells.push_back(std::move(cell));
      continue;
    }
    const auto ids = tuple_order(fam, chosen.arm1_far_to_near, chosen.arm2_far_to_near);
    cell.multiset_match = multiset_match(fam, d);
    cell.all_above_one = true;
    bool ordered_ok = ids.size() == fam.values.size();
    for (std::size_t v = 0; v < ids.size(); ++v) {
      const Rat& value = d.aci.at(ids[v]);
      cell.computed.emplace_back(ids[v], value);
      if (value <= 1) cell.all_above_one = false;
      if (v >= fam.values.size()) continue;
      const auto& tv = fam.values[v];
      cell.expected.push_back(tv.readings.front().at(d.x));
      auto r = matching_reading(tv, d.x, value);
      if (r && tv.readings.size() > 1) confirmed[{fam.row, v}].insert(*r);
      if (!r && cell.mismatch_vertex.empty()) {
        ordered_ok = false;
        cell.mismatch_vertex = ids[v];
        cell.detail = "vertex " + ids[v] + ": computed " + to_string(value) + ", table " +
                      tv.printed + " = " + to_string(tv.readings.front().at(d.x));
      }
    }
    if (!cell.all_above_one && cell.detail.empty())
      cell.detail = "some a_i + c_i <= 1";
    cell.status = (ordered_ok && cell.all_above_one) ? CellStatus::Pass : CellStatus::Fail;
    rep.cells.push_back(std::move(cell));
  }

  for (const auto& [key, readings] : confirmed) {
    const ETypeFamily* fam = nullptr;
    for (const auto& in : inputs)
      if (in.fam->row == key.first) fam = in.fam;
    const auto& cellv = fam->values[key.second];
    std::ostringstream note;
    note << "row " << key.first << ", printed " << cellv.printed << ": ";
    if (readings.size() == 1)
      note << "confirmed reading " << cellv.readings[*readings.begin()].text;
    else
      note << "ambiguous; " << readings.size() << " readings match";
    std::vector<std::string> rejected;
    for (std::size_t r = 0; r < cellv.readings.size(); ++r)
      if (!readings.count(r)) rejected.push_back(cellv.readings[r].text);
    for (const auto& t : rejected) note << "; rejected " << t;
    rep.reading_notes.push_back(note.str());
  }
  return rep;
}

std::vector<CellInput> cell_inputs(long m_lo, long m_hi, std::span<const ETypeFamily> table) {
  std::vector<CellInput> in;
  for (const auto& fam : table)
    for (long m = m_lo; m <= m_hi; ++m) in.push_back({&fam, m});
  return in;
}

}  // namespace

AppendixReport verify_appendix(long m_lo, long m_hi) {
  return verify_appendix(m_lo, m_hi, etype_families());
}

AppendixReport verify_appendix(long m_lo, long m_hi, std::span<const ETypeFamily> table) {
  const auto inputs = cell_inputs(m_lo, m_hi, table);
  std::vector<CellData> data(inputs.size());
  const auto count = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) data[k] = compute_cell(inputs[k]);
  return assemble(m_lo, m_hi, inputs, data);
}

AppendixReport verify_appendix_serial(long m_lo, long m_hi, std::span<const ETypeFamily> table) {
  const auto inputs = cell_inputs(m_lo, m_hi, table);
  std::vector<CellData> data;
  data.reserve(inputs.size());
  for (const auto& in : inputs) data.push_back(compute_cell(in));
  return assemble(m_lo, m_hi, inputs, data);
}

}  // namespace surfgerm
