// trihelix -- Triple-Helix synergy indicators from U/I/G publication counts.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trihelix/cli.hpp"

namespace {

using namespace trihelix;

Unit unit_from(const std::string& s) {
  const auto u = parse_unit(s);
  if (!u) throw CLI::ValidationError("--unit", "expected bit, mbit or nat");
  return *u;
}

bool with_none_from(const std::string& s) {
  if (detail::iequals(s, "union")) return false;
  if (detail::iequals(s, "with-none")) return true;
  throw CLI::ValidationError("--policy", "expected union or with-none");
}

std::optional<Format> format_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto f = cli::parse_format(s);
  if (!f) throw CLI::ValidationError("--format", "expected csv or json");
  return f;
}

struct CommonFlags {
  std::string input, bundled, format;
  std::string unit = "mbit";
  std::string policy = "union";
  std::string output, output_format;
  std::string chart;
};

void add_input_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input", f.input, "input dataset file (.csv or .json)");
  cmd->add_option("--bundled", f.bundled,
                  "use a bundled reference dataset: table1 or table2");
  cmd->add_option("--format", f.format,
                  "input format override: csv or json");
}

void add_unit_policy_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--unit", f.unit, "output unit: bit, mbit or nat")
      ->capture_default_str();
  cmd->add_option("--policy", f.policy,
                  "universe policy: union or with-none")
      ->capture_default_str();
}

cli::InputSpec input_spec(const CommonFlags& f) {
  return {f.input, f.bundled, format_from(f.format)};
}

cli::OutputSpec output_spec(const CommonFlags& f) {
  return {f.output, format_from(f.output_format)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple-Helix synergy indicators from university/industry/"
               "government publication counts"};
  app.require_subcommand(1);

  CommonFlags compute_flags;
  auto* compute = app.add_subcommand(
      "compute", "compute the seven entropies and four transmissions");
  add_input_flags(compute, compute_flags);
  add_unit_policy_flags(compute, compute_flags);
  compute->add_option("--output", compute_flags.output,
                      "write the indicator table as a dataset file");
  compute->add_option("--output-format", compute_flags.output_format,
                      "output format override: csv or json");

  CommonFlags rank_flags;
  std::string rank_window;
  auto* rank = app.add_subcommand(
      "rank", "rank countries by T(UIG), most negative first");
  add_input_flags(rank, rank_flags);
  add_unit_policy_flags(rank, rank_flags);
  rank->add_option("--window", rank_window, "year window, YEAR or START-END")
      ->required();
  rank->add_option("--output", rank_flags.output,
                   "write the ranking as a t-only dataset file");
  rank->add_option("--output-format", rank_flags.output_format,
                   "output format override: csv or json");
  rank->add_option("--chart", rank_flags.chart, "write an SVG bar chart");

  CommonFlags series_flags;
  std::string series_country, series_scenario = "default";
  auto* series = app.add_subcommand(
      "series", "windowed T(UIG) listing with trend classification");
  add_input_flags(series, series_flags);
  add_unit_policy_flags(series, series_flags);
  series->add_option("--country", series_country, "country name")->required();
  series->add_option("--scenario", series_scenario, "scenario tag")
      ->capture_default_str();
  series->add_option("--output", series_flags.output,
                     "write the series as a t-only dataset file");
  series->add_option("--output-format", series_flags.output_format,
                     "output format override: csv or json");
  series->add_option("--chart", series_flags.chart,
                     "write an SVG line chart");

  CommonFlags decompose_flags;
  std::string decompose_country, decompose_scenario = "default";
  auto* decompose = app.add_subcommand(
      "decompose", "bilateral T(UI), T(UG), T(IG) series from counts");
  add_input_flags(decompose, decompose_flags);
  add_unit_policy_flags(decompose, decompose_flags);
  decompose->add_option("--country", decompose_country, "country name")
      ->required();
  decompose->add_option("--scenario", decompose_scenario, "scenario tag")
      ->capture_default_str();
  decompose->add_option("--output", decompose_flags.output,
                        "write the bilateral series as numeric CSV");
  decompose->add_option("--chart", decompose_flags.chart,
                        "write an SVG line chart");

  std::string queries_country;
  int queries_start = 0, queries_end = 0;
  bool queries_bare = false, queries_json = false;
  trihelix::PlanOptions plan_options;
  auto* queries = app.add_subcommand(
      "queries", "emit the ten-step search plan for a country and year range");
  queries->add_option("country", queries_country, "country name")->required();
  queries->add_option("start", queries_start, "first publication year")
      ->required();
  queries->add_option("end", queries_end, "last publication year")->required();
  queries->add_flag("--bare-single-year", queries_bare,
                    "emit PY=YEAR instead of PY=YEAR-YEAR");
  queries->add_flag("--json", queries_json, "emit the plan as JSON");
  queries->add_option("--extra-university", plan_options.extra_university_terms,
                      "extra OR-term for the university pattern");
  queries->add_option("--extra-industry", plan_options.extra_industry_terms,
                      "extra OR-term for the industry pattern");
  queries->add_option("--extra-government", plan_options.extra_government_terms,
                      "extra OR-term for the government pattern");

  CommonFlags check_flags;
  auto* check = app.add_subcommand("check", "validate a dataset file");
  add_input_flags(check, check_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      return trihelix::cli::run_compute(
          {input_spec(compute_flags), unit_from(compute_flags.unit),
           with_none_from(compute_flags.policy), output_spec(compute_flags)},
          std::cout, std::cerr);
    }
    if (*rank) {
      return trihelix::cli::run_rank(
          {input_spec(rank_flags), rank_window, unit_from(rank_flags.unit),
           with_none_from(rank_flags.policy), output_spec(rank_flags),
           rank_flags.chart},
          std::cout, std::cerr);
    }
    if (*series) {
      return trihelix::cli::run_series(
          {input_spec(series_flags), series_country, series_scenario,
           unit_from(series_flags.unit), with_none_from(series_flags.policy),
           output_spec(series_flags), series_flags.chart},
          std::cout, std::cerr);
    }
    if (*decompose) {
      return trihelix::cli::run_decompose(
          {input_spec(decompose_flags), decompose_country, decompose_scenario,
           unit_from(decompose_flags.unit),
           with_none_from(decompose_flags.policy), decompose_flags.output,
           decompose_flags.chart},
          std::cout, std::cerr);
    }
    if (*queries) {
      return trihelix::cli::run_queries({queries_country, queries_start,
                                         queries_end, queries_bare,
                                         queries_json, plan_options},
                                        std::cout, std::cerr);
    }
    if (*check) {
      return trihelix::cli::run_check({input_spec(check_flags)}, std::cout,
                                      std::cerr);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
