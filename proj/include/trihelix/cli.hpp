#pragma once

//
// Command implementations behind the trihelix tool. Each run_* function
// performs one subcommand, writes human-readable results to `out` and
// diagnostics to `err`, and returns the process exit code:
//
//   0  success
//   1  data violations found (check)
//   2  usage, parse or validation failure
//
// All validation happens before any output file is written.
//

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "trihelix/analysis.hpp"
#include "trihelix/dataset.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/measures.hpp"
#include "trihelix/query.hpp"
#include "trihelix/reference.hpp"
#include "trihelix/svg.hpp"

namespace trihelix::cli {

inline std::optional<Format> parse_format(std::string_view s) {
  if (detail::iequals(s, "csv")) return Format::csv;
  if (detail::iequals(s, "json")) return Format::json;
  return std::nullopt;
}

struct InputSpec {
  std::string path;              // file input...
  std::string bundled;           // ...or "table1" / "table2"
  std::optional<Format> format;  // default: inferred from the extension
};

inline Dataset load_input(const InputSpec& spec) {
  if (!spec.bundled.empty()) {
    if (!spec.path.empty())
      throw Error("give either --input or --bundled, not both");
    if (detail::iequals(spec.bundled, "table1")) return reference_table1();
    if (detail::iequals(spec.bundled, "table2")) return reference_table2();
    throw Error("unknown bundled dataset '" + spec.bundled +
                "' (expected table1 or table2)");
  }
  if (spec.path.empty()) throw Error("no input: give --input or --bundled");

  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw Error("cannot read '" + spec.path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  Format format;
  if (spec.format) {
    format = *spec.format;
  } else {
    const auto inferred = infer_format(spec.path);
    if (!inferred)
      throw Error("cannot infer format of '" + spec.path +
                  "'; use --format csv|json");
    format = *inferred;
  }
  return parse(buf.str(), format);
}

struct OutputSpec {
  std::string path;
  std::optional<Format> format;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out.good()) throw Error("failed writing '" + path + "'");
}

inline void write_dataset(const OutputSpec& spec, const Dataset& d) {
  if (spec.path.empty()) return;
  Format format;
  if (spec.format) {
    format = *spec.format;
  } else {
    const auto inferred = infer_format(spec.path);
    if (!inferred)
      throw Error("cannot infer format of '" + spec.path +
                  "'; use --output-format csv|json");
    format = *inferred;
  }
  write_file(spec.path, serialize(d, format));
}

namespace detail_cli {

inline std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

inline std::string num(double v) { return detail::format_sig4(v); }

inline Window parse_window_arg(const std::string& text) {
  const auto w = parse_window(text);
  if (!w)
    throw Error("cannot parse window '" + text +
                "'; expected YEAR or START-END");
  return *w;
}

inline std::string available_keys(const Dataset& d) {
  std::string out;
  for (const auto& [country, scenario] : d.series_keys()) {
    if (!out.empty()) out += ", ";
    out += scenario == "default" ? country : country + "(" + scenario + ")";
  }
  return out;
}

inline std::string available_windows(const Dataset& d) {
  std::string out;
  for (const auto& w : d.windows()) {
    if (!out.empty()) out += ", ";
    out += w.str();
  }
  return out;
}

}  // namespace detail_cli

struct ComputeOptions {
  InputSpec input;
  Unit unit = Unit::mbit;
  bool with_none = false;
  OutputSpec output;
};

inline int run_compute(const ComputeOptions& opt, std::ostream& out,
                       std::ostream& err) {
  try {
    const Dataset input = load_input(opt.input);

    struct Row {
      const CountryWindowRecord* record;
      IndicatorSet indicators;
    };
    std::vector<Row> rows;
    std::vector<std::string> diagnostics;

    for (const auto& r : input.records()) {
      const std::string where = r.key() + " " + r.window.str();
      if (!r.payload) {
        diagnostics.push_back(where + ": missing payload, nothing to compute");
        continue;
      }
      try {
        if (const auto* c = std::get_if<CountsPayload>(&*r.payload)) {
          const auto violations = validate(c->counts);
          if (!violations.empty()) {
            for (const auto& v : violations)
              diagnostics.push_back(where + ": " + v.message);
            continue;
          }
          rows.push_back(
              {&r, indicator_set(to_exclusive(c->counts),
                                 detail::policy_for(*c, opt.with_none),
                                 opt.unit)});
        } else if (const auto* e =
                       std::get_if<EntropiesPayload>(&*r.payload)) {
          rows.push_back({&r, indicator_set(e->h, opt.unit)});
        } else {
          diagnostics.push_back(
              where + ": t-only record carries no entropies to combine");
        }
      } catch (const Error& ex) {
        diagnostics.push_back(where + ": " + ex.what());
      }
    }
    if (!diagnostics.empty()) {
      for (const auto& d : diagnostics) err << "error: " << d << "\n";
      return 2;
    }

    std::size_t key_w = 12;
    for (const auto& row : rows)
      key_w = std::max(key_w, row.record->key().size() + 2);

    using detail_cli::num;
    using detail_cli::pad_left;
    using detail_cli::pad_right;
    const char* headers[] = {"H(U)",  "H(I)",  "H(G)",  "H(UI)",
                             "H(IG)", "H(UG)", "H(UIG)", "T(UI)",
                             "T(UG)", "T(IG)", "T(UIG)"};
    out << "unit: " << unit_name(opt.unit) << "\n";
    out << pad_right("key", key_w) << pad_right("window", 11);
    for (const char* h : headers) out << pad_left(h, 9);
    out << "\n";
    for (const auto& row : rows) {
      const IndicatorSet& s = row.indicators;
      out << pad_right(row.record->key(), key_w)
          << pad_right(row.record->window.str(), 11);
      for (const EntropyValue* v :
           {&s.h_u, &s.h_i, &s.h_g, &s.h_ui, &s.h_ig, &s.h_ug, &s.h_uig,
            &s.t_ui, &s.t_ug, &s.t_ig, &s.t_uig})
        out << pad_left(num(v->value), 9);
      out << "\n";
    }

    if (!opt.output.path.empty()) {
      Dataset result(opt.unit, "computed indicators");
      for (const auto& row : rows) {
        EntropiesPayload p;
        const IndicatorSet& s = row.indicators;
        p.h = EntropyProfile{s.h_u, s.h_i, s.h_g, s.h_ui, s.h_ig, s.h_ug,
                             s.h_uig};
        p.t_uig = s.t_uig;
        result.add(CountryWindowRecord{row.record->country,
                                       row.record->scenario,
                                       row.record->window, p});
      }
      write_dataset(opt.output, result);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct RankOptions {
  InputSpec input;
  std::string window;
  Unit unit = Unit::mbit;
  bool with_none = false;
  OutputSpec output;
  std::string chart_path;
};

inline int run_rank(const RankOptions& opt, std::ostream& out,
                    std::ostream& err) {
  try {
    const Dataset input = load_input(opt.input);
    const Window window = detail_cli::parse_window_arg(opt.window);
    Dataset::validate_window(window);

    const auto records = input.at_window(window);
    if (records.empty())
      throw Error("no records in window " + window.str() +
                  "; available windows: " +
                  detail_cli::available_windows(input));

    const auto entries = rank_by_synergy(records, opt.with_none);

    out << "T(UIG) ranking, " << window.str() << " ("
        << unit_name(opt.unit) << ")\n";
    std::size_t key_w = 12;
    for (const auto& e : entries) key_w = std::max(key_w, e.key.size() + 2);
    for (const auto& e : entries) {
      out << detail_cli::pad_left(std::to_string(e.position), 3) << ". "
          << detail_cli::pad_right(e.key, key_w)
          << detail_cli::pad_left(detail_cli::num(e.t_uig.in(opt.unit)), 9)
          << "\n";
    }

    if (!opt.chart_path.empty()) {
      std::vector<BarDatum> bars;
      for (const auto& e : entries)
        bars.push_back({e.key, e.t_uig.in(opt.unit)});
      write_file(opt.chart_path,
                 bar_chart("T(UIG) ranking, " + window.str(), bars,
                           "T(UIG) [" + std::string(unit_name(opt.unit)) +
                               "]"));
    }

    if (!opt.output.path.empty()) {
      Dataset result(opt.unit, "T(UIG) ranking for " + window.str());
      for (const auto& e : entries) {
        // recover country/scenario from the ranked key
        for (const auto& r : records) {
          if (r.key() != e.key) continue;
          result.add(CountryWindowRecord{
              r.country, r.scenario, r.window,
              TransmissionPayload{convert_unit(e.t_uig, opt.unit)}});
          break;
        }
      }
      write_dataset(opt.output, result);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct SeriesOptions {
  InputSpec input;
  std::string country;
  std::string scenario = "default";
  Unit unit = Unit::mbit;
  bool with_none = false;
  OutputSpec output;
  std::string chart_path;
};

inline int run_series(const SeriesOptions& opt, std::ostream& out,
                      std::ostream& err) {
  try {
    const Dataset input = load_input(opt.input);
    const auto records = input.series(opt.country, opt.scenario);
    if (records.empty()) {
      const std::string key = opt.scenario == "default"
                                  ? opt.country
                                  : opt.country + "(" + opt.scenario + ")";
      throw Error("unknown key " + key + "; available keys: " +
                  detail_cli::available_keys(input));
    }

    const TrendSummary summary = trend(records, opt.with_none);

    out << "T(UIG) series for " << records.front().key() << " ("
        << unit_name(opt.unit) << ")\n";
    for (const auto& r : records) {
      const auto t = record_t_uig(r, opt.with_none);
      out << detail_cli::pad_right(r.window.str(), 11)
          << (t ? detail_cli::pad_left(detail_cli::num(t->in(opt.unit)), 9)
                : detail_cli::pad_left("n.a.", 9))
          << "\n";
    }
    out << "trend: " << trend_name(summary.classification);
    if (summary.first_value && summary.last_value) {
      out << " (" << detail_cli::num(summary.first_value->in(opt.unit))
          << " -> " << detail_cli::num(summary.last_value->in(opt.unit))
          << " " << unit_name(opt.unit) << ")";
    }
    out << "\n";

    if (!opt.chart_path.empty()) {
      std::vector<std::string> labels;
      LineSeries line{records.front().key(), {}};
      for (const auto& r : records) {
        labels.push_back(r.window.str());
        const auto t = record_t_uig(r, opt.with_none);
        line.values.push_back(t ? std::optional<double>(t->in(opt.unit))
                                : std::nullopt);
      }
      write_file(opt.chart_path,
                 line_chart("T(UIG), " + records.front().key(), labels,
                            {line},
                            "T(UIG) [" + std::string(unit_name(opt.unit)) +
                                "]"));
    }

    if (!opt.output.path.empty()) {
      Dataset result(opt.unit, "T(UIG) series for " + records.front().key());
      for (const auto& r : records) {
        const auto t = record_t_uig(r, opt.with_none);
        CountryWindowRecord rec{r.country, r.scenario, r.window, std::nullopt};
        if (t) rec.payload = TransmissionPayload{convert_unit(*t, opt.unit)};
        result.add(std::move(rec));
      }
      write_dataset(opt.output, result);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct DecomposeOptions {
  InputSpec input;
  std::string country;
  std::string scenario = "default";
  Unit unit = Unit::mbit;
  bool with_none = false;
  std::string output_path;  // chart-data CSV, not a dataset
  std::string chart_path;
};

inline int run_decompose(const DecomposeOptions& opt, std::ostream& out,
                         std::ostream& err) {
  try {
    const Dataset input = load_input(opt.input);
    const auto records = input.series(opt.country, opt.scenario);
    if (records.empty()) {
      const std::string key = opt.scenario == "default"
                                  ? opt.country
                                  : opt.country + "(" + opt.scenario + ")";
      throw Error("unknown key " + key + "; available keys: " +
                  detail_cli::available_keys(input));
    }

    const auto points = bilateral_decomposition(records, opt.with_none,
                                                opt.unit);

    out << "bilateral transmissions for " << records.front().key() << " ("
        << unit_name(opt.unit) << ")\n";
    out << detail_cli::pad_right("window", 11)
        << detail_cli::pad_left("T(UI)", 9) << detail_cli::pad_left("T(UG)", 9)
        << detail_cli::pad_left("T(IG)", 9) << "\n";
    for (const auto& p : points) {
      out << detail_cli::pad_right(p.window.str(), 11)
          << detail_cli::pad_left(detail_cli::num(p.t_ui.value), 9)
          << detail_cli::pad_left(detail_cli::num(p.t_ug.value), 9)
          << detail_cli::pad_left(detail_cli::num(p.t_ig.value), 9) << "\n";
    }

    if (!opt.chart_path.empty()) {
      std::vector<std::string> labels;
      LineSeries ui{"T(UI)", {}}, ug{"T(UG)", {}}, ig{"T(IG)", {}};
      for (const auto& p : points) {
        labels.push_back(p.window.str());
        ui.values.push_back(p.t_ui.value);
        ug.values.push_back(p.t_ug.value);
        ig.values.push_back(p.t_ig.value);
      }
      write_file(opt.chart_path,
                 line_chart("Bilateral transmissions, " +
                                records.front().key(),
                            labels, {ui, ug, ig},
                            "T [" + std::string(unit_name(opt.unit)) + "]"));
    }

    if (!opt.output_path.empty()) {
      const std::string u(unit_name(opt.unit));
      std::string csv = "py_start,py_end,t_ui_" + u + ",t_ug_" + u +
                        ",t_ig_" + u + "\n";
      for (const auto& p : points) {
        csv += std::to_string(p.window.start) + "," +
               std::to_string(p.window.end) + "," +
               detail::format_full(p.t_ui.value) + "," +
               detail::format_full(p.t_ug.value) + "," +
               detail::format_full(p.t_ig.value) + "\n";
      }
      write_file(opt.output_path, csv);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct QueriesOptions {
  std::string country;
  int start_year = 0;
  int end_year = 0;
  bool bare_single_year = false;
  bool json = false;
  PlanOptions plan_options;  // enrichment terms
};

inline int run_queries(const QueriesOptions& opt, std::ostream& out,
                       std::ostream& err) {
  try {
    PlanOptions po = opt.plan_options;
    po.bare_single_year = opt.bare_single_year;
    const QueryPlan plan =
        build_plan(opt.country, opt.start_year, opt.end_year, po);
    if (opt.json)
      out << plan.to_json().dump(2) << "\n";
    else
      out << plan.to_text();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct CheckOptions {
  InputSpec input;
};

inline int run_check(const CheckOptions& opt, std::ostream& out,
                     std::ostream& err) {
  Dataset input{};
  try {
    input = load_input(opt.input);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> problems;
  for (const auto& r : input.records()) {
    const std::string where = r.key() + " " + r.window.str();
    if (!r.payload) continue;
    if (const auto* c = std::get_if<CountsPayload>(&*r.payload)) {
      const auto violations = validate(c->counts);
      for (const auto& v : violations)
        problems.push_back(where + ": " + v.message);
      if (violations.empty() && c->total &&
          *c->total < inclusive_union(c->counts))
        problems.push_back(where + ": total_n = " + std::to_string(*c->total) +
                           " is smaller than the union of cells");
    }
  }

  if (problems.empty()) {
    out << "OK: " << input.records().size() << " record(s), no violations\n";
    return 0;
  }
  for (const auto& p : problems) out << p << "\n";
  out << problems.size() << " violation(s)\n";
  return 1;
}

}  // namespace trihelix::cli
