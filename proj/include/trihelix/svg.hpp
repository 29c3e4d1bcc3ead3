#pragma once

// Self-contained SVG bar and line charts. No runtime dependencies, fixed
// number formatting, so identical input produces identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "trihelix/detail.hpp"

namespace trihelix {

struct BarDatum {
  std::string label;
  double value = 0.0;
};

struct LineSeries {
  std::string name;
  std::vector<std::optional<double>> values;  // aligned with x labels
};

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* series_color(std::size_t k) {
  static const char* palette[] = {"#1f6fb4", "#d1495b", "#3a8c5c",
                                  "#b07c2a", "#6a4fa3", "#4c8f8f"};
  return palette[k % (sizeof palette / sizeof palette[0])];
}

struct YScale {
  double lo, hi, y0, y1;  // value range mapped to pixel range (y grows down)
  double at(double v) const { return y1 + (v - lo) / (hi - lo) * (y0 - y1); }
};

inline YScale make_yscale(double lo, double hi, double top, double bottom) {
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = (hi - lo) * 0.05;
  return YScale{lo - pad, hi + pad, bottom, top};
}

inline void y_axis(std::string& out, const YScale& ys, double x_left,
                   double x_right) {
  for (int k = 0; k <= 4; ++k) {
    const double v = ys.lo + (ys.hi - ys.lo) * k / 4.0;
    const double y = ys.at(v);
    out += "<line x1=\"" + svg_num(x_left) + "\" y1=\"" + svg_num(y) +
           "\" x2=\"" + svg_num(x_right) + "\" y2=\"" + svg_num(y) +
           "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + svg_num(x_left - 6) + "\" y=\"" + svg_num(y + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + format_sig4(v) +
           "</text>\n";
  }
}

}  // namespace detail

inline std::string bar_chart(const std::string& title,
                             const std::vector<BarDatum>& data,
                             const std::string& value_label) {
  using namespace detail;
  const double width = 900, height = 460;
  const double left = 80, right = 20, top = 50, bottom = 120;

  double lo = 0.0, hi = 0.0;
  for (const auto& d : data) {
    lo = std::min(lo, d.value);
    hi = std::max(hi, d.value);
  }
  const YScale ys = make_yscale(lo, hi, top, height - bottom);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         svg_num(width) + "\" height=\"" + svg_num(height) +
         "\" font-family=\"sans-serif\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + svg_num(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(title) + "</text>\n";
  out += "<text x=\"16\" y=\"" + svg_num(height / 2) +
         "\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "16 " +
         svg_num(height / 2) + ")\">" + xml_escape(value_label) + "</text>\n";
  y_axis(out, ys, left, width - right);

  const double span = width - left - right;
  const double step = data.empty() ? span : span / static_cast<double>(data.size());
  const double bar_w = step * 0.7;
  const double zero = ys.at(0.0);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double x = left + step * (static_cast<double>(k) + 0.15);
    const double yv = ys.at(data[k].value);
    const double y = std::min(yv, zero);
    const double h = std::abs(yv - zero);
    out += "<rect x=\"" + svg_num(x) + "\" y=\"" + svg_num(y) + "\" width=\"" +
           svg_num(bar_w) + "\" height=\"" + svg_num(h) +
           "\" fill=\"" + series_color(0) + "\"/>\n";
    const double lx = x + bar_w / 2;
    const double ly = height - bottom + 14;
    out += "<text x=\"" + svg_num(lx) + "\" y=\"" + svg_num(ly) +
           "\" font-size=\"11\" text-anchor=\"end\" transform=\"rotate(-45 " +
           svg_num(lx) + " " + svg_num(ly) + ")\">" + xml_escape(data[k].label) +
           "</text>\n";
  }
  out += "<line x1=\"" + svg_num(left) + "\" y1=\"" + svg_num(zero) +
         "\" x2=\"" + svg_num(width - right) + "\" y2=\"" + svg_num(zero) +
         "\" stroke=\"#333333\"/>\n";
  out += "</svg>\n";
  return out;
}

inline std::string line_chart(const std::string& title,
                              const std::vector<std::string>& x_labels,
                              const std::vector<LineSeries>& series,
                              const std::string& value_label) {
  using namespace detail;
  const double width = 900, height = 460;
  const double left = 80, right = 170, top = 50, bottom = 90;

  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (const auto& s : series)
    for (const auto& v : s.values)
      if (v) {
        lo = seen ? std::min(lo, *v) : *v;
        hi = seen ? std::max(hi, *v) : *v;
        seen = true;
      }
  if (!seen) {
    lo = -1;
    hi = 1;
  }
  const YScale ys = make_yscale(std::min(lo, 0.0), std::max(hi, 0.0), top,
                                height - bottom);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         svg_num(width) + "\" height=\"" + svg_num(height) +
         "\" font-family=\"sans-serif\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + svg_num(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(title) + "</text>\n";
  out += "<text x=\"16\" y=\"" + svg_num(height / 2) +
         "\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "16 " +
         svg_num(height / 2) + ")\">" + xml_escape(value_label) + "</text>\n";
  y_axis(out, ys, left, width - right);

  const double span = width - left - right;
  const std::size_t n = x_labels.size();
  const auto x_at = [&](std::size_t k) {
    if (n <= 1) return left + span / 2;
    return left + span * static_cast<double>(k) / static_cast<double>(n - 1);
  };

  for (std::size_t k = 0; k < n; ++k) {
    const double lx = x_at(k);
    const double ly = height - bottom + 16;
    out += "<text x=\"" + svg_num(lx) + "\" y=\"" + svg_num(ly) +
           "\" font-size=\"11\" text-anchor=\"end\" transform=\"rotate(-45 " +
           svg_num(lx) + " " + svg_num(ly) + ")\">" + xml_escape(x_labels[k]) +
           "</text>\n";
  }

  const double zero = ys.at(0.0);
  out += "<line x1=\"" + svg_num(left) + "\" y1=\"" + svg_num(zero) +
         "\" x2=\"" + svg_num(width - right) + "\" y2=\"" + svg_num(zero) +
         "\" stroke=\"#333333\"/>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = series_color(s);
    // split polyline at gaps so missing windows stay visible as breaks
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t k = 0; k < series[s].values.size() && k < n; ++k) {
      const auto& v = series[s].values[k];
      if (!v) {
        flush();
        continue;
      }
      points += svg_num(x_at(k)) + "," + svg_num(ys.at(*v)) + " ";
      out += "<circle cx=\"" + svg_num(x_at(k)) + "\" cy=\"" +
             svg_num(ys.at(*v)) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
    }
    flush();

    const double lx = width - right + 12;
    const double ly = top + 18 * static_cast<double>(s);
    out += "<rect x=\"" + svg_num(lx) + "\" y=\"" + svg_num(ly - 9) +
           "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
    out += "<text x=\"" + svg_num(lx + 16) + "\" y=\"" + svg_num(ly + 1) +
           "\" font-size=\"11\">" + xml_escape(series[s].name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace trihelix
