#pragma once

//
// Result-side computations over datasets: synergy ranking, time-series trend
// classification, scenario comparison, bilateral transmission decomposition,
// and publication-growth series.
//

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trihelix/dataset.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/measures.hpp"

namespace trihelix {

namespace detail {

inline UniversePolicy policy_for(const CountsPayload& p, bool with_none) {
  if (!with_none) return UniversePolicy::union_only();
  if (!p.total)
    throw PayloadUnavailableError(
        "with-none policy requires a total_n column on counts records");
  return UniversePolicy::with_none(*p.total);
}

}  // namespace detail

/// T(UIG) of a record, whatever its payload granularity: published values
/// are passed through, entropies are combined, counts are corrected and
/// evaluated. Missing records yield nullopt.
inline std::optional<EntropyValue> record_t_uig(const CountryWindowRecord& r,
                                                bool with_none = false) {
  if (!r.payload) return std::nullopt;
  if (const auto* t = std::get_if<TransmissionPayload>(&*r.payload))
    return t->t_uig;
  if (const auto* e = std::get_if<EntropiesPayload>(&*r.payload)) {
    if (e->t_uig) return *e->t_uig;
    return indicator_set(e->h).t_uig;
  }
  const auto& c = std::get<CountsPayload>(*r.payload);
  return indicator_set(to_exclusive(c.counts),
                       detail::policy_for(c, with_none))
      .t_uig;
}

struct RankEntry {
  std::string key;
  EntropyValue t_uig;
  int position = 0;  // 1 = most negative = most nationally integrated
};

/// Ascending T(UIG): strongest synergy first, most globalized last. Ties
/// break alphabetically so output is reproducible.
inline std::vector<RankEntry> rank_by_synergy(
    const std::vector<CountryWindowRecord>& records, bool with_none = false) {
  std::vector<RankEntry> entries;
  entries.reserve(records.size());
  for (const auto& r : records) {
    const auto t = record_t_uig(r, with_none);
    if (!t)
      throw MissingValueError("record " + r.key() + " " + r.window.str() +
                              " carries no T(UIG) value");
    entries.push_back({r.key(), *t, 0});
  }
  std::sort(entries.begin(), entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              const double ta = a.t_uig.in(Unit::bit);
              const double tb = b.t_uig.in(Unit::bit);
              if (ta != tb) return ta < tb;
              return a.key < b.key;
            });
  for (std::size_t k = 0; k < entries.size(); ++k)
    entries[k].position = static_cast<int>(k) + 1;
  return entries;
}

enum class Trend { toward_zero, away_from_zero, mixed, insufficient_data };

constexpr std::string_view trend_name(Trend t) {
  switch (t) {
    case Trend::toward_zero:
      return "toward-zero";
    case Trend::away_from_zero:
      return "away-from-zero";
    case Trend::mixed:
      return "mixed";
    case Trend::insufficient_data:
      return "insufficient-data";
  }
  return "mixed";
}

struct TrendSummary {
  std::string key;
  std::optional<EntropyValue> first_value;  // earliest non-missing window
  std::optional<EntropyValue> last_value;   // latest non-missing window
  std::optional<EntropyValue> abs_delta;    // |last| - |first|
  Trend classification = Trend::insufficient_data;
};

/// Endpoint movement and the least-squares slope of |T| over window
/// midpoints must agree for a definite classification; anything else is
/// mixed. Missing windows are skipped, never interpolated.
inline TrendSummary trend(const std::vector<CountryWindowRecord>& series,
                          bool with_none = false) {
  std::vector<CountryWindowRecord> sorted = series;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.window < b.window; });

  TrendSummary out;
  if (!sorted.empty()) out.key = sorted.front().key();

  std::vector<double> xs, ys;  // midpoint year, |T| in bits
  std::optional<EntropyValue> first, last;
  for (const auto& r : sorted) {
    const auto t = record_t_uig(r, with_none);
    if (!t) continue;
    if (!first) first = *t;
    last = *t;
    xs.push_back((r.window.start + r.window.end) / 2.0);
    ys.push_back(std::abs(t->in(Unit::bit)));
  }
  out.first_value = first;
  out.last_value = last;
  if (xs.size() < 2) {
    out.classification = Trend::insufficient_data;
    return out;
  }
  out.abs_delta = EntropyValue{
      std::abs(last->value) - std::abs(first->in(last->unit)), last->unit};

  double mx = 0, my = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0, den = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    num += (xs[k] - mx) * (ys[k] - my);
    den += (xs[k] - mx) * (xs[k] - mx);
  }
  const double slope = den > 0 ? num / den : 0.0;

  const double abs_first = std::abs(first->in(Unit::bit));
  const double abs_last = std::abs(last->in(Unit::bit));
  if (abs_last < abs_first && slope < 0)
    out.classification = Trend::toward_zero;
  else if (abs_last > abs_first && slope > 0)
    out.classification = Trend::away_from_zero;
  else
    out.classification = Trend::mixed;
  return out;
}

struct ScenarioDelta {
  Window window;
  EntropyValue a;
  EntropyValue b;
  EntropyValue delta;  // b - a
};

struct ScenarioComparison {
  std::vector<ScenarioDelta> deltas;
  int negative = 0;
  int zero = 0;
  int positive = 0;

  std::string sign_summary() const {
    return std::to_string(negative) + " negative, " + std::to_string(zero) +
           " zero, " + std::to_string(positive) + " positive";
  }
};

/// Per-window differences B - A over the windows both series cover; windows
/// missing on either side are skipped pairwise.
inline ScenarioComparison compare_scenarios(
    const std::vector<CountryWindowRecord>& a_series,
    const std::vector<CountryWindowRecord>& b_series, bool with_none = false) {
  ScenarioComparison out;
  std::vector<CountryWindowRecord> a_sorted = a_series;
  std::sort(a_sorted.begin(), a_sorted.end(),
            [](const auto& x, const auto& y) { return x.window < y.window; });

  for (const auto& ra : a_sorted) {
    const CountryWindowRecord* rb = nullptr;
    for (const auto& r : b_series)
      if (r.window == ra.window) {
        rb = &r;
        break;
      }
    if (!rb) continue;
    const auto ta = record_t_uig(ra, with_none);
    const auto tb = record_t_uig(*rb, with_none);
    if (!ta || !tb) continue;
    const Unit unit = ta->unit;
    const double av = ta->value;
    const double bv = tb->in(unit);
    const double dv = bv - av;
    out.deltas.push_back({ra.window,
                          *ta,
                          {bv, unit},
                          {dv, unit}});
    if (dv < 0)
      ++out.negative;
    else if (dv > 0)
      ++out.positive;
    else
      ++out.zero;
  }
  if (out.deltas.empty())
    throw NoOverlapError("the two series share no window with values");
  return out;
}

struct BilateralPoint {
  Window window;
  EntropyValue t_ui;
  EntropyValue t_ug;
  EntropyValue t_ig;
};

/// Per-window bilateral transmissions from counts payloads. Missing windows
/// are skipped; any other payload kind cannot supply pairwise information.
inline std::vector<BilateralPoint> bilateral_decomposition(
    const std::vector<CountryWindowRecord>& series, bool with_none = false,
    Unit unit = Unit::bit) {
  std::vector<CountryWindowRecord> sorted = series;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.window < b.window; });

  std::vector<BilateralPoint> out;
  for (const auto& r : sorted) {
    if (!r.payload) continue;
    const auto* c = std::get_if<CountsPayload>(&*r.payload);
    if (!c)
      throw PayloadUnavailableError(
          "record " + r.key() + " " + r.window.str() +
          " does not carry counts; bilateral decomposition needs the full "
          "cell table");
    const Joint3 joint = cells_to_joint3(to_exclusive(c->counts),
                                         detail::policy_for(*c, with_none));
    out.push_back({r.window,
                   transmission2(joint.pairwise(Axis::u, Axis::i), unit),
                   transmission2(joint.pairwise(Axis::u, Axis::g), unit),
                   transmission2(joint.pairwise(Axis::i, Axis::g), unit)});
  }
  return out;
}

struct GrowthPoint {
  Window window;
  std::int64_t u0 = 0;
  std::int64_t i0 = 0;
  std::int64_t g0 = 0;
};

/// Inclusive sector totals per window, for output-volume plots.
inline std::vector<GrowthPoint> growth_series(
    const std::vector<CountryWindowRecord>& records) {
  std::vector<CountryWindowRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.window < b.window; });

  std::vector<GrowthPoint> out;
  for (const auto& r : sorted) {
    if (!r.payload) continue;
    const auto* c = std::get_if<CountsPayload>(&*r.payload);
    if (!c)
      throw PayloadUnavailableError("record " + r.key() + " " +
                                    r.window.str() +
                                    " does not carry counts");
    out.push_back({r.window, c->counts.u0, c->counts.i0, c->counts.g0});
  }
  return out;
}

}  // namespace trihelix
