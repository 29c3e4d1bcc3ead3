#pragma once

//
// Overlap correction for sector document counts.
//
// Retrieval counts each document once per matching sector set (U0..UIG0,
// logical AND of the sector queries), so overlapping regions are counted
// repeatedly. The probability universe instead needs the seven disjoint
// Venn cells (U..UIG). The two representations are related by
// inclusion-exclusion and convert losslessly in both directions.
//

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trihelix/errors.hpp"

namespace trihelix {

/// Raw retrieval totals; overlaps are multiply counted.
struct InclusiveCounts {
  std::int64_t u0 = 0;
  std::int64_t i0 = 0;
  std::int64_t g0 = 0;
  std::int64_t ui0 = 0;
  std::int64_t ug0 = 0;
  std::int64_t ig0 = 0;
  std::int64_t uig0 = 0;

  friend bool operator==(const InclusiveCounts&,
                         const InclusiveCounts&) = default;
};

/// The seven disjoint cells, plus an optional count of documents matching
/// none of the three sector queries. Correction never produces `none`; it
/// only enters through a dataset's country-total column.
struct ExclusiveCells {
  std::int64_t u = 0;
  std::int64_t i = 0;
  std::int64_t g = 0;
  std::int64_t ui = 0;
  std::int64_t ug = 0;
  std::int64_t ig = 0;
  std::int64_t uig = 0;
  std::optional<std::int64_t> none;

  std::int64_t union_total() const { return u + i + g + ui + ug + ig + uig; }

  friend bool operator==(const ExclusiveCells&,
                         const ExclusiveCells&) = default;
};

/// One failed consistency rule; violations are data, not exceptions.
struct Violation {
  std::string rule;
  std::string message;
};

namespace detail {

inline std::string int_str(std::int64_t v) { return std::to_string(v); }

struct CorrectedCells {
  std::int64_t u, i, g, ui, ug, ig, uig;
};

inline CorrectedCells correct(const InclusiveCounts& c) {
  return CorrectedCells{
      c.u0 - c.ui0 - c.ug0 + c.uig0, c.i0 - c.ui0 - c.ig0 + c.uig0,
      c.g0 - c.ig0 - c.ug0 + c.uig0, c.ui0 - c.uig0,
      c.ug0 - c.uig0,                c.ig0 - c.uig0,
      c.uig0};
}

}  // namespace detail

/// Converts multiply-counted totals into disjoint cells. Throws
/// NegativeCellError when any corrected cell drops below zero; such counts
/// cannot come from a real document set and clamping would distort every
/// entropy computed downstream.
inline ExclusiveCells to_exclusive(const InclusiveCounts& c) {
  const auto raw = {c.u0, c.i0, c.g0, c.ui0, c.ug0, c.ig0, c.uig0};
  for (std::int64_t v : raw) {
    if (v < 0)
      throw NegativeCellError("inclusive count " + detail::int_str(v) +
                              " is negative");
  }
  const auto cc = detail::correct(c);
  const struct {
    const char* name;
    std::int64_t value;
  } cells[] = {{"u", cc.u},   {"i", cc.i},   {"g", cc.g},  {"ui", cc.ui},
               {"ug", cc.ug}, {"ig", cc.ig}, {"uig", cc.uig}};
  for (const auto& cell : cells) {
    if (cell.value < 0)
      throw NegativeCellError("corrected cell " + std::string(cell.name) +
                              " = " + detail::int_str(cell.value) +
                              " is negative; retrieval counts are "
                              "inconsistent");
  }
  return ExclusiveCells{cc.u, cc.i, cc.g, cc.ui, cc.ug, cc.ig, cc.uig,
                        std::nullopt};
}

/// Union of the three retrieval sets by inclusion-exclusion.
inline std::int64_t inclusive_union(const InclusiveCounts& c) {
  return c.u0 + c.i0 + c.g0 - c.ui0 - c.ug0 - c.ig0 + c.uig0;
}

/// Exact inverse of to_exclusive: recounts each cell into every retrieval
/// set that contains it.
inline InclusiveCounts to_inclusive(const ExclusiveCells& cells) {
  return InclusiveCounts{
      cells.u + cells.ui + cells.ug + cells.uig,
      cells.i + cells.ui + cells.ig + cells.uig,
      cells.g + cells.ug + cells.ig + cells.uig,
      cells.ui + cells.uig,
      cells.ug + cells.uig,
      cells.ig + cells.uig,
      cells.uig};
}

/// Collects every violated consistency rule. Empty result means the counts
/// describe a realizable document set and to_exclusive will succeed.
inline std::vector<Violation> validate(const InclusiveCounts& c) {
  using detail::int_str;
  std::vector<Violation> out;

  const struct {
    const char* name;
    std::int64_t value;
  } raw[] = {{"u0", c.u0},   {"i0", c.i0},   {"g0", c.g0},  {"ui0", c.ui0},
             {"ug0", c.ug0}, {"ig0", c.ig0}, {"uig0", c.uig0}};
  for (const auto& f : raw) {
    if (f.value < 0)
      out.push_back({std::string(f.name) + " >= 0",
                     std::string(f.name) + " = " + int_str(f.value)});
  }
  if (!out.empty()) return out;  // pair rules are meaningless on negatives

  const auto pair_rule = [&](const char* rule, std::int64_t pair,
                             std::int64_t lhs, std::int64_t rhs,
                             const char* ln, const char* rn) {
    if (pair > std::min(lhs, rhs))
      out.push_back({rule, std::string(rule) + ": " + int_str(pair) + " > min(" +
                               ln + " = " + int_str(lhs) + ", " + rn + " = " +
                               int_str(rhs) + ")"});
  };
  pair_rule("ui0 > min(u0,i0)", c.ui0, c.u0, c.i0, "u0", "i0");
  pair_rule("ug0 > min(u0,g0)", c.ug0, c.u0, c.g0, "u0", "g0");
  pair_rule("ig0 > min(i0,g0)", c.ig0, c.i0, c.g0, "i0", "g0");

  if (c.uig0 > std::min({c.ui0, c.ug0, c.ig0}))
    out.push_back({"uig0 > min(ui0,ug0,ig0)",
                   "uig0 > min(ui0,ug0,ig0): " + int_str(c.uig0) + " > min(" +
                       int_str(c.ui0) + ", " + int_str(c.ug0) + ", " +
                       int_str(c.ig0) + ")"});
  if (!out.empty()) return out;  // negative cells would be consequences

  const auto cc = detail::correct(c);
  const struct {
    const char* name;
    std::int64_t value;
  } cells[] = {{"u", cc.u},   {"i", cc.i},   {"g", cc.g},  {"ui", cc.ui},
               {"ug", cc.ug}, {"ig", cc.ig}, {"uig", cc.uig}};
  for (const auto& cell : cells) {
    if (cell.value < 0)
      out.push_back({"corrected cell >= 0",
                     "corrected cell " + std::string(cell.name) + " = " +
                         int_str(cell.value) + " is negative"});
  }
  return out;
}

}  // namespace trihelix
