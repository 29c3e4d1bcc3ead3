#pragma once

//
// Country/window/scenario records and their file formats.
//
// A record carries one of three payload granularities -- raw inclusive
// counts, seven precomputed entropies, or a single T(UIG) value -- or an
// explicit missing marker (`n.a.` in CSV, `null` in JSON). Values are kept
// in the unit the file declares; datasets are immutable after load.
//

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "trihelix/counts.hpp"
#include "trihelix/detail.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/measures.hpp"
#include "trihelix/units.hpp"

namespace trihelix {

inline constexpr int kYearMin = 1900;
inline constexpr int kYearMax = 2100;

/// Inclusive publication-year range.
struct Window {
  int start = 0;
  int end = 0;

  std::string str() const {
    return std::to_string(start) + "-" + std::to_string(end);
  }

  friend bool operator==(const Window&, const Window&) = default;
  friend auto operator<=>(const Window&, const Window&) = default;
};

inline std::optional<Window> parse_window(std::string_view text) {
  text = detail::trim(text);
  Window w;
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    if (!detail::parse_int64_as_int(text, w.start)) return std::nullopt;
    w.end = w.start;
  } else {
    if (!detail::parse_int64_as_int(text.substr(0, dash), w.start) ||
        !detail::parse_int64_as_int(text.substr(dash + 1), w.end))
      return std::nullopt;
  }
  return w;
}

struct CountsPayload {
  InclusiveCounts counts;
  std::optional<std::int64_t> total;  // country-wide document total, if known

  friend bool operator==(const CountsPayload&, const CountsPayload&) = default;
};

struct EntropiesPayload {
  EntropyProfile h;
  std::optional<EntropyValue> t_uig;  // published T, kept for cross-checks

  friend bool operator==(const EntropiesPayload&,
                         const EntropiesPayload&) = default;
};

struct TransmissionPayload {
  EntropyValue t_uig;

  friend bool operator==(const TransmissionPayload&,
                         const TransmissionPayload&) = default;
};

using Payload = std::variant<CountsPayload, EntropiesPayload, TransmissionPayload>;

struct CountryWindowRecord {
  std::string country;
  std::string scenario = "default";
  Window window;
  std::optional<Payload> payload;  // nullopt is the explicit missing marker

  std::string key() const {
    return scenario == "default" ? country : country + "(" + scenario + ")";
  }

  friend bool operator==(const CountryWindowRecord&,
                         const CountryWindowRecord&) = default;
};

/// An ordered collection of records with unique (country, scenario, window)
/// keys.
class Dataset {
 public:
  explicit Dataset(Unit unit = Unit::mbit, std::string provenance = "")
      : unit_(unit), provenance_(std::move(provenance)) {}

  void add(CountryWindowRecord record) {
    validate_window(record.window);
    if (record.country.empty())
      throw Error("record has an empty country name");
    const std::string key = record.country + "\x1f" + record.scenario +
                            "\x1f" + record.window.str();
    if (!keys_.insert(key).second)
      throw DuplicateKeyError("duplicate record key: " + record.key() + " " +
                              record.window.str());
    records_.push_back(std::move(record));
  }

  const std::vector<CountryWindowRecord>& records() const { return records_; }
  Unit unit() const { return unit_; }
  const std::string& provenance() const { return provenance_; }
  bool empty() const { return records_.empty(); }

  const CountryWindowRecord* find(std::string_view country,
                                  std::string_view scenario,
                                  const Window& window) const {
    for (const auto& r : records_)
      if (r.country == country && r.scenario == scenario && r.window == window)
        return &r;
    return nullptr;
  }

  /// All records of one key, in window order.
  std::vector<CountryWindowRecord> series(std::string_view country,
                                          std::string_view scenario) const {
    std::vector<CountryWindowRecord> out;
    for (const auto& r : records_)
      if (r.country == country && r.scenario == scenario) out.push_back(r);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.window < b.window; });
    return out;
  }

  std::vector<CountryWindowRecord> at_window(const Window& window) const {
    std::vector<CountryWindowRecord> out;
    for (const auto& r : records_)
      if (r.window == window) out.push_back(r);
    return out;
  }

  std::vector<Window> windows() const {
    std::set<Window> seen;
    for (const auto& r : records_) seen.insert(r.window);
    return std::vector<Window>(seen.begin(), seen.end());
  }

  /// Unique (country, scenario) pairs in first-appearance order.
  std::vector<std::pair<std::string, std::string>> series_keys() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : records_) {
      std::pair<std::string, std::string> key{r.country, r.scenario};
      if (std::find(out.begin(), out.end(), key) == out.end())
        out.push_back(std::move(key));
    }
    return out;
  }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.unit_ == b.unit_ && a.provenance_ == b.provenance_ &&
           a.records_ == b.records_;
  }

  static void validate_window(const Window& w) {
    if (w.start > w.end)
      throw Error("window reversed: " + w.str());
    if (w.start < kYearMin || w.end > kYearMax)
      throw Error("window " + w.str() + " outside " +
                  std::to_string(kYearMin) + ".." + std::to_string(kYearMax));
  }

 private:
  Unit unit_;
  std::string provenance_;
  std::vector<CountryWindowRecord> records_;
  std::set<std::string> keys_;
};

enum class Format { csv, json };

inline std::optional<Format> infer_format(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const auto ext = path.substr(dot + 1);
  if (detail::iequals(ext, "csv")) return Format::csv;
  if (detail::iequals(ext, "json")) return Format::json;
  return std::nullopt;
}

namespace detail {

enum class PayloadKind { counts, entropies, transmission };

inline bool is_missing_cell(std::string_view cell) {
  const auto t = trim(cell);
  return t.empty() || iequals(t, "n.a.");
}

inline const std::vector<std::string>& fixed_columns() {
  static const std::vector<std::string> cols = {"country", "scenario",
                                                "py_start", "py_end"};
  return cols;
}

inline const std::vector<std::string>& counts_columns() {
  static const std::vector<std::string> cols = {"u0", "i0",  "g0", "ui0",
                                                "ug0", "ig0", "uig0"};
  return cols;
}

inline const std::vector<std::string>& entropy_columns() {
  static const std::vector<std::string> cols = {"h_u",  "h_i",  "h_g", "h_ui",
                                                "h_ig", "h_ug", "h_uig"};
  return cols;
}

inline std::optional<Unit> unit_from_t_column(std::string_view name) {
  if (!name.starts_with("t_")) return std::nullopt;
  return parse_unit(name.substr(2));
}

struct CsvHeader {
  PayloadKind kind;
  bool has_total = false;
  bool has_t = false;                 // trailing published-T column
  std::optional<Unit> declared_unit;  // from the t_<unit> column name
};

inline CsvHeader parse_csv_header(const std::vector<std::string>& cols,
                                  std::size_t line) {
  const auto& fixed = fixed_columns();
  if (cols.size() < fixed.size() + 1)
    throw ParseError("header has too few columns", line);
  for (std::size_t k = 0; k < fixed.size(); ++k)
    if (std::string(trim(cols[k])) != fixed[k])
      throw ParseError("expected column '" + fixed[k] + "'", line, cols[k]);

  std::vector<std::string> payload;
  for (std::size_t k = fixed.size(); k < cols.size(); ++k)
    payload.push_back(std::string(trim(cols[k])));

  CsvHeader h{};
  const auto& counts = counts_columns();
  const auto& entropies = entropy_columns();
  const auto matches = [&](const std::vector<std::string>& want) {
    if (payload.size() < want.size()) return false;
    for (std::size_t k = 0; k < want.size(); ++k)
      if (payload[k] != want[k]) return false;
    return true;
  };

  if (matches(counts)) {
    h.kind = PayloadKind::counts;
    if (payload.size() == counts.size() + 1 && payload.back() == "total_n") {
      h.has_total = true;
    } else if (payload.size() != counts.size()) {
      throw ParseError("unexpected column after counts payload", line,
                       payload[counts.size()]);
    }
    return h;
  }
  if (matches(entropies)) {
    h.kind = PayloadKind::entropies;
    if (payload.size() == entropies.size() + 1) {
      const auto u = unit_from_t_column(payload.back());
      if (!u)
        throw ParseError("unexpected column after entropies payload", line,
                         payload.back());
      h.has_t = true;
      h.declared_unit = u;
    } else if (payload.size() != entropies.size()) {
      throw ParseError("unexpected column after entropies payload", line,
                       payload[entropies.size()]);
    }
    return h;
  }
  if (payload.size() == 1) {
    const auto u = unit_from_t_column(payload[0]);
    if (u) {
      h.kind = PayloadKind::transmission;
      h.declared_unit = u;
      return h;
    }
  }
  throw ParseError(
      "unrecognized payload columns; expected counts (u0..uig0), entropies "
      "(h_u..h_uig) or a t_<unit> column",
      line);
}

inline double parse_double_cell(const std::vector<std::string>& cells,
                                std::size_t idx, const std::string& column,
                                std::size_t line) {
  double v;
  if (!parse_double(cells[idx], v))
    throw ParseError("cannot parse number '" + cells[idx] + "'", line, column);
  return v;
}

inline std::int64_t parse_count_cell(const std::vector<std::string>& cells,
                                     std::size_t idx,
                                     const std::string& column,
                                     std::size_t line) {
  std::int64_t v;
  if (!parse_int64(cells[idx], v))
    throw ParseError("cannot parse count '" + cells[idx] + "'", line, column);
  if (v < 0)
    throw ParseError("count must be non-negative, got " + cells[idx], line,
                     column);
  return v;
}

}  // namespace detail

inline Dataset parse_csv(std::string_view text);
inline Dataset parse_json(std::string_view text);
inline std::string serialize_csv(const Dataset& d);
inline std::string serialize_json(const Dataset& d);

inline Dataset parse(std::string_view text, Format format) {
  return format == Format::csv ? parse_csv(text) : parse_json(text);
}

inline std::string serialize(const Dataset& d, Format format) {
  return format == Format::csv ? serialize_csv(d) : serialize_json(d);
}

inline Dataset parse_csv(std::string_view text) {
  using namespace detail;

  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view line = nl == std::string_view::npos
                                  ? text.substr(pos)
                                  : text.substr(pos, nl - pos);
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!trim(line).empty()) lines.emplace_back(lineno, std::string(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError("empty input", 1);

  std::optional<Unit> unit_line;
  std::string provenance;
  std::size_t idx = 0;
  for (; idx < lines.size(); ++idx) {
    const auto& [lineno, line] = lines[idx];
    if (line[0] != '#') break;
    const std::string_view body = trim(std::string_view(line).substr(1));
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = trim(body.substr(0, eq));
    const auto value = body.substr(eq + 1);
    if (key == "unit") {
      const auto u = parse_unit(value);
      if (!u) throw ParseError("unknown unit '" + std::string(value) + "'",
                               lineno);
      unit_line = u;
    } else if (key == "provenance") {
      provenance = std::string(value);
    }
  }
  if (idx >= lines.size()) throw ParseError("missing header row", lines.back().first);

  const auto& [header_line, header_text] = lines[idx];
  const auto header_cells = split_csv(header_text);
  const CsvHeader header = parse_csv_header(header_cells, header_line);

  Unit unit = Unit::mbit;
  if (unit_line && header.declared_unit && *unit_line != *header.declared_unit)
    throw ParseError("unit declaration disagrees with t column name",
                     header_line);
  if (unit_line)
    unit = *unit_line;
  else if (header.declared_unit)
    unit = *header.declared_unit;

  Dataset out(unit, provenance);
  const std::size_t n_fixed = fixed_columns().size();

  for (++idx; idx < lines.size(); ++idx) {
    const auto& [lineno, line] = lines[idx];
    if (line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (cells.size() != header_cells.size())
      throw ParseError("expected " + std::to_string(header_cells.size()) +
                           " fields, got " + std::to_string(cells.size()),
                       lineno);

    CountryWindowRecord record;
    record.country = std::string(trim(cells[0]));
    if (record.country.empty())
      throw ParseError("empty country name", lineno, "country");
    record.scenario = std::string(trim(cells[1]));
    if (record.scenario.empty()) record.scenario = "default";

    if (!parse_int64_as_int(cells[2], record.window.start))
      throw ParseError("cannot parse year '" + cells[2] + "'", lineno,
                       "py_start");
    if (!parse_int64_as_int(cells[3], record.window.end))
      throw ParseError("cannot parse year '" + cells[3] + "'", lineno,
                       "py_end");
    if (record.window.start > record.window.end)
      throw ParseError("window reversed: " + record.window.str(), lineno,
                       "py_start");
    if (record.window.start < kYearMin || record.window.end > kYearMax)
      throw ParseError("window " + record.window.str() + " outside " +
                           std::to_string(kYearMin) + ".." +
                           std::to_string(kYearMax),
                       lineno, "py_start");

    // A payload is missing when every payload cell is empty or `n.a.`.
    bool all_missing = true;
    for (std::size_t k = n_fixed; k < cells.size(); ++k)
      if (!is_missing_cell(cells[k])) all_missing = false;

    if (all_missing) {
      record.payload = std::nullopt;
    } else if (header.kind == PayloadKind::counts) {
      CountsPayload p;
      const auto& names = counts_columns();
      std::int64_t* slots[7] = {&p.counts.u0,  &p.counts.i0,  &p.counts.g0,
                                &p.counts.ui0, &p.counts.ug0, &p.counts.ig0,
                                &p.counts.uig0};
      for (std::size_t k = 0; k < 7; ++k)
        *slots[k] = parse_count_cell(cells, n_fixed + k, names[k], lineno);
      if (header.has_total && !is_missing_cell(cells[n_fixed + 7])) {
        std::int64_t total;
        if (!parse_int64(cells[n_fixed + 7], total) || total < 0)
          throw ParseError("cannot parse count '" + cells[n_fixed + 7] + "'",
                           lineno, "total_n");
        p.total = total;
      }
      record.payload = p;
    } else if (header.kind == PayloadKind::entropies) {
      EntropiesPayload p;
      const auto& names = entropy_columns();
      EntropyValue* slots[7] = {&p.h.h_u,  &p.h.h_i,  &p.h.h_g, &p.h.h_ui,
                                &p.h.h_ig, &p.h.h_ug, &p.h.h_uig};
      for (std::size_t k = 0; k < 7; ++k)
        *slots[k] = EntropyValue{
            parse_double_cell(cells, n_fixed + k, names[k], lineno), unit};
      if (header.has_t && !is_missing_cell(cells[n_fixed + 7]))
        p.t_uig = EntropyValue{
            parse_double_cell(cells, n_fixed + 7,
                              std::string(header_cells[n_fixed + 7]), lineno),
            unit};
      record.payload = p;
    } else {
      TransmissionPayload p;
      p.t_uig = EntropyValue{
          parse_double_cell(cells, n_fixed,
                            std::string(header_cells[n_fixed]), lineno),
          unit};
      record.payload = p;
    }

    try {
      out.add(std::move(record));
    } catch (const DuplicateKeyError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

inline std::string serialize_csv(const Dataset& d) {
  using namespace detail;

  std::optional<PayloadKind> kind;
  bool any_total = false;
  bool any_t = false;
  for (const auto& r : d.records()) {
    if (!r.payload) continue;
    PayloadKind k = PayloadKind::transmission;
    if (std::holds_alternative<CountsPayload>(*r.payload)) {
      k = PayloadKind::counts;
      any_total |= std::get<CountsPayload>(*r.payload).total.has_value();
    } else if (std::holds_alternative<EntropiesPayload>(*r.payload)) {
      k = PayloadKind::entropies;
      any_t |= std::get<EntropiesPayload>(*r.payload).t_uig.has_value();
    }
    if (kind && *kind != k)
      throw Error("CSV cannot mix payload kinds; use JSON for mixed datasets");
    kind = k;
  }
  if (!kind) kind = PayloadKind::transmission;  // header-only / all-missing

  if (d.provenance().find('\n') != std::string::npos)
    throw Error("CSV provenance must be a single line");

  std::string out;
  out += "# unit=" + std::string(unit_name(d.unit())) + "\n";
  if (!d.provenance().empty()) out += "# provenance=" + d.provenance() + "\n";

  const std::string t_col = "t_" + std::string(unit_name(d.unit()));
  std::vector<std::string> cols = fixed_columns();
  std::size_t n_payload = 0;
  switch (*kind) {
    case PayloadKind::counts:
      for (const auto& c : counts_columns()) cols.push_back(c);
      if (any_total) cols.push_back("total_n");
      n_payload = 7 + (any_total ? 1 : 0);
      break;
    case PayloadKind::entropies:
      for (const auto& c : entropy_columns()) cols.push_back(c);
      if (any_t) cols.push_back(t_col);
      n_payload = 7 + (any_t ? 1 : 0);
      break;
    case PayloadKind::transmission:
      cols.push_back(t_col);
      n_payload = 1;
      break;
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) out += ',';
    out += cols[k];
  }
  out += '\n';

  for (const auto& r : d.records()) {
    out += csv_escape(r.country);
    out += ',';
    out += csv_escape(r.scenario);
    out += ',';
    out += std::to_string(r.window.start);
    out += ',';
    out += std::to_string(r.window.end);
    if (!r.payload) {
      for (std::size_t k = 0; k < n_payload; ++k) out += ",n.a.";
    } else if (*kind == PayloadKind::counts) {
      const auto& p = std::get<CountsPayload>(*r.payload);
      const std::int64_t vals[7] = {p.counts.u0,  p.counts.i0,  p.counts.g0,
                                    p.counts.ui0, p.counts.ug0, p.counts.ig0,
                                    p.counts.uig0};
      for (std::int64_t v : vals) out += ',' + std::to_string(v);
      if (any_total)
        out += ',' + (p.total ? std::to_string(*p.total) : std::string());
    } else if (*kind == PayloadKind::entropies) {
      const auto& p = std::get<EntropiesPayload>(*r.payload);
      const EntropyValue vals[7] = {p.h.h_u,  p.h.h_i,  p.h.h_g, p.h.h_ui,
                                    p.h.h_ig, p.h.h_ug, p.h.h_uig};
      for (const auto& v : vals) out += ',' + format_full(v.in(d.unit()));
      if (any_t)
        out += ',' + (p.t_uig ? format_full(p.t_uig->in(d.unit()))
                              : std::string("n.a."));
    } else {
      const auto& p = std::get<TransmissionPayload>(*r.payload);
      out += ',' + format_full(p.t_uig.in(d.unit()));
    }
    out += '\n';
  }
  return out;
}

inline Dataset parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1);
  }

  try {
    if (!j.is_object()) throw ParseError("top level must be an object", 1);
    Unit unit = Unit::mbit;
    if (j.contains("unit")) {
      const auto u = parse_unit(j.at("unit").get<std::string>());
      if (!u)
        throw ParseError("unknown unit '" +
                             j.at("unit").get<std::string>() + "'",
                         1, "unit");
      unit = *u;
    }
    Dataset out(unit, j.value("provenance", std::string()));

    std::size_t n = 0;
    for (const auto& rj : j.at("records")) {
      ++n;
      CountryWindowRecord r;
      r.country = rj.at("country").get<std::string>();
      r.scenario = rj.value("scenario", std::string("default"));
      if (r.scenario.empty()) r.scenario = "default";
      r.window.start = rj.at("py_start").get<int>();
      r.window.end = rj.at("py_end").get<int>();

      const auto& pj = rj.at("payload");
      if (pj.is_null()) {
        r.payload = std::nullopt;
      } else {
        const std::string kind = pj.at("kind").get<std::string>();
        if (kind == "counts") {
          CountsPayload p;
          p.counts.u0 = pj.at("u0").get<std::int64_t>();
          p.counts.i0 = pj.at("i0").get<std::int64_t>();
          p.counts.g0 = pj.at("g0").get<std::int64_t>();
          p.counts.ui0 = pj.at("ui0").get<std::int64_t>();
          p.counts.ug0 = pj.at("ug0").get<std::int64_t>();
          p.counts.ig0 = pj.at("ig0").get<std::int64_t>();
          p.counts.uig0 = pj.at("uig0").get<std::int64_t>();
          if (pj.contains("total_n"))
            p.total = pj.at("total_n").get<std::int64_t>();
          r.payload = p;
        } else if (kind == "entropies") {
          EntropiesPayload p;
          p.h.h_u = {pj.at("h_u").get<double>(), unit};
          p.h.h_i = {pj.at("h_i").get<double>(), unit};
          p.h.h_g = {pj.at("h_g").get<double>(), unit};
          p.h.h_ui = {pj.at("h_ui").get<double>(), unit};
          p.h.h_ig = {pj.at("h_ig").get<double>(), unit};
          p.h.h_ug = {pj.at("h_ug").get<double>(), unit};
          p.h.h_uig = {pj.at("h_uig").get<double>(), unit};
          if (pj.contains("t")) p.t_uig = EntropyValue{pj.at("t").get<double>(), unit};
          r.payload = p;
        } else if (kind == "t") {
          r.payload = TransmissionPayload{{pj.at("t").get<double>(), unit}};
        } else {
          throw ParseError("unknown payload kind '" + kind + "'", n,
                           "payload");
        }
      }
      try {
        out.add(std::move(r));
      } catch (const DuplicateKeyError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), n);
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1);
  }
}

inline std::string serialize_json(const Dataset& d) {
  nlohmann::ordered_json j;
  j["unit"] = std::string(unit_name(d.unit()));
  j["provenance"] = d.provenance();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : d.records()) {
    nlohmann::ordered_json rj;
    rj["country"] = r.country;
    rj["scenario"] = r.scenario;
    rj["py_start"] = r.window.start;
    rj["py_end"] = r.window.end;
    if (!r.payload) {
      rj["payload"] = nullptr;
    } else if (const auto* c = std::get_if<CountsPayload>(&*r.payload)) {
      nlohmann::ordered_json pj;
      pj["kind"] = "counts";
      pj["u0"] = c->counts.u0;
      pj["i0"] = c->counts.i0;
      pj["g0"] = c->counts.g0;
      pj["ui0"] = c->counts.ui0;
      pj["ug0"] = c->counts.ug0;
      pj["ig0"] = c->counts.ig0;
      pj["uig0"] = c->counts.uig0;
      if (c->total) pj["total_n"] = *c->total;
      rj["payload"] = std::move(pj);
    } else if (const auto* e = std::get_if<EntropiesPayload>(&*r.payload)) {
      nlohmann::ordered_json pj;
      pj["kind"] = "entropies";
      pj["h_u"] = e->h.h_u.in(d.unit());
      pj["h_i"] = e->h.h_i.in(d.unit());
      pj["h_g"] = e->h.h_g.in(d.unit());
      pj["h_ui"] = e->h.h_ui.in(d.unit());
      pj["h_ig"] = e->h.h_ig.in(d.unit());
      pj["h_ug"] = e->h.h_ug.in(d.unit());
      pj["h_uig"] = e->h.h_uig.in(d.unit());
      if (e->t_uig) pj["t"] = e->t_uig->in(d.unit());
      rj["payload"] = std::move(pj);
    } else {
      const auto& t = std::get<TransmissionPayload>(*r.payload);
      rj["payload"] = {{"kind", "t"}, {"t", t.t_uig.in(d.unit())}};
    }
    j["records"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

}  // namespace trihelix
