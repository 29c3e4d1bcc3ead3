#pragma once

//
// Ten-step Web-of-Science search program for one country and year range.
// Steps #1-#5 are direct address searches (university, industry, and
// governmental address patterns), #6-#10 are boolean combinations deriving
// G0 and the overlap counts. Strings are emitted verbatim, never executed.
//

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "trihelix/detail.hpp"
#include "trihelix/errors.hpp"

namespace trihelix {

struct QueryStep {
  std::string label;  // "#1" .. "#10"
  enum class Kind { direct_search, boolean_combination } kind;
  std::string text;
};

constexpr std::string_view query_step_kind_name(QueryStep::Kind k) {
  return k == QueryStep::Kind::direct_search ? "direct-search"
                                             : "boolean-combination";
}

struct QueryPlan {
  std::string country;           // as requested
  std::string expanded_country;  // as emitted in the search strings
  int start_year = 0;
  int end_year = 0;
  std::array<QueryStep, 10> steps;

  std::string to_text() const {
    std::string out;
    for (const auto& s : steps) {
      out += s.label;
      out += ": ";
      out += s.text;
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["country"] = country;
    j["expanded_country"] = expanded_country;
    j["py_start"] = start_year;
    j["py_end"] = end_year;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : steps)
      j["steps"].push_back({{"label", s.label},
                            {"kind", std::string(query_step_kind_name(s.kind))},
                            {"text", s.text}});
    return j;
  }
};

/// UK is a WoS artifact: the database indexes the four constituent nations
/// separately. Everything else passes through verbatim.
inline std::string expand_country(const std::string& name) {
  if (detail::iequals(detail::trim(name), "UK"))
    return "(England OR Scotland OR Wales OR North Ireland)";
  return name;
}

struct PlanOptions {
  /// Emit `PY=2011` instead of `PY=2011-2011` for single-year ranges.
  bool bare_single_year = false;
  /// Extra OR-terms appended inside the sector patterns. Off by default so
  /// plans stay byte-identical to the published protocol.
  std::vector<std::string> extra_university_terms;
  std::vector<std::string> extra_industry_terms;
  std::vector<std::string> extra_government_terms;
};

namespace detail {

inline std::string join_terms(std::string base,
                              const std::vector<std::string>& extra) {
  for (const auto& t : extra) base += " OR " + t;
  return base;
}

}  // namespace detail

inline QueryPlan build_plan(const std::string& country, int start_year,
                            int end_year, const PlanOptions& options = {}) {
  if (detail::trim(country).empty())
    throw EmptyCountryError("country must not be empty");
  if (start_year > end_year)
    throw InvalidYearRangeError("year range " + std::to_string(start_year) +
                                "-" + std::to_string(end_year) +
                                " is reversed");

  const std::string univ =
      detail::join_terms("UNIV* OR COLL*", options.extra_university_terms);
  const std::string corp = detail::join_terms(
      "GMBH* OR CORP* OR LTD* OR AG*", options.extra_industry_terms);
  const std::string govt = detail::join_terms(
      "NATL* OR NACL* OR NAZL* OR GOVT* OR MINIST* OR ACAD* OR NIH*",
      options.extra_government_terms);

  const std::string expanded = expand_country(country);
  const std::string py =
      (options.bare_single_year && start_year == end_year)
          ? "PY=" + std::to_string(start_year)
          : "PY=" + std::to_string(start_year) + "-" +
                std::to_string(end_year);

  const auto direct = [&](const std::string& clauses) {
    return py + " AND AD=(" + expanded + " " + clauses + ")";
  };

  QueryPlan plan;
  plan.country = country;
  plan.expanded_country = expanded;
  plan.start_year = start_year;
  plan.end_year = end_year;

  using Kind = QueryStep::Kind;
  plan.steps = {
      QueryStep{"#1", Kind::direct_search, direct("SAME (" + univ + ")")},
      QueryStep{"#2", Kind::direct_search, direct("SAME (" + corp + ")")},
      QueryStep{"#3", Kind::direct_search, direct("SAME (" + govt + ")")},
      QueryStep{"#4", Kind::direct_search,
                direct("SAME (" + govt + ") SAME (" + univ + ")")},
      QueryStep{"#5", Kind::direct_search,
                direct("SAME (" + govt + ") SAME (" + corp + ")")},
      QueryStep{"#6", Kind::boolean_combination, "#3 NOT #4 NOT #5"},
      QueryStep{"#7", Kind::boolean_combination, "#1 AND #2"},
      QueryStep{"#8", Kind::boolean_combination, "#1 AND #6"},
      QueryStep{"#9", Kind::boolean_combination, "#2 AND #6"},
      QueryStep{"#10", Kind::boolean_combination, "#1 AND #2 AND #6"},
  };
  return plan;
}

struct CountryGroups {
  std::vector<std::string> g7;
  std::vector<std::string> brics;
  std::vector<std::string> ins;
};

inline const CountryGroups& country_groups() {
  static const CountryGroups groups{
      {"CANADA", "FRANCE", "GERMANY", "ITALY", "JAPAN", "UK", "USA"},
      {"BRAZIL", "RUSSIA", "INDIA", "CHINA", "SOUTH AFRICA"},
      {"INDONESIA", "NETHERLANDS", "SOUTH KOREA"},
  };
  return groups;
}

}  // namespace trihelix
