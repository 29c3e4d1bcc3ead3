#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "trihelix/svg.hpp"

using namespace trihelix;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = haystack.find(needle, pos)) != std::string::npos;
       pos += needle.size())
    ++n;
  return n;
}

}  // namespace

TEST_CASE("bar charts are deterministic and carry one bar per entry") {
  const std::vector<BarDatum> bars = {
      {"INDIA", -109.5}, {"USA", -29.96}, {"GERMANY", -16.09}};
  const std::string a = bar_chart("ranking", bars, "T(UIG) [mbit]");
  const std::string b = bar_chart("ranking", bars, "T(UIG) [mbit]");
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  // one bar rect per entry plus the background rect
  CHECK(count_of(a, "<rect") == bars.size() + 1);
  CHECK(a.find("INDIA") != std::string::npos);
  CHECK(a.find("T(UIG) [mbit]") != std::string::npos);
}

TEST_CASE("line charts break at missing windows") {
  const std::vector<std::string> labels = {"1971-1975", "1976-1980",
                                           "1981-1985", "1986-1990"};
  const LineSeries gappy{"RUSSIA",
                         {std::nullopt, -61.5, std::nullopt, -54.4}};
  const std::string svg = line_chart("series", labels, {gappy}, "T [mbit]");
  // two isolated points: two single-point polylines, two markers
  CHECK(count_of(svg, "<polyline") == 2);
  CHECK(count_of(svg, "<circle") == 2);

  const LineSeries solid{"USA", {-82.0, -88.3, -89.7, -85.7}};
  const std::string svg2 = line_chart("series", labels, {solid}, "T [mbit]");
  CHECK(count_of(svg2, "<polyline") == 1);
  CHECK(count_of(svg2, "<circle") == 4);
}

TEST_CASE("labels are XML-escaped") {
  const std::string svg =
      bar_chart("a <b> & \"c\"", {{"X & Y", -1.0}}, "T");
  CHECK(svg.find("a &lt;b&gt; &amp; &quot;c&quot;") != std::string::npos);
  CHECK(svg.find("X &amp; Y") != std::string::npos);
  CHECK(svg.find("<b>") == std::string::npos);
}

TEST_CASE("empty charts still render") {
  CHECK(bar_chart("empty", {}, "T").find("</svg>") != std::string::npos);
  CHECK(line_chart("empty", {}, {}, "T").find("</svg>") != std::string::npos);
}
