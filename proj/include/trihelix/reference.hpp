#pragma once

//
// Bundled reference datasets for the G7 + BRICS + INS country set, in mbit.
//
// Table 1: the seven entropies and T(UIG) for publication year 2011, one row
// per country, with China entered under both attribution scenarios for the
// Chinese Academy of Sciences (CAS counted as university vs. governmental
// output).
//
// Table 2: T(UIG) for eight five-year windows covering 1971-2010. Russia has
// no separate values before 1991 (Soviet-era records), marked missing.
//

#include <optional>

#include "trihelix/dataset.hpp"

namespace trihelix {

namespace detail {

struct Table1Row {
  const char* country;
  const char* scenario;
  double h_u, h_i, h_g, h_ui, h_ig, h_ug, h_uig, t_uig;
};

inline constexpr Table1Row kTable1[] = {
    {"USA", "default", 254.1, 215.4, 362.9, 451, 578.1, 508.6, 675.4, -29.96},
    {"UK", "default", 225.3, 280.3, 186.9, 439.1, 467, 362.3, 542.5, -33.4},
    {"FRANCE", "default", 359.6, 299.7, 354.9, 581.5, 654.2, 611.3, 769.5,
     -63.17},
    {"GERMANY", "default", 306.7, 468.8, 52.36, 598.1, 521.1, 351.4, 626.5,
     -16.09},
    {"ITALY", "default", 300.6, 285.5, 476, 575.1, 759.1, 655.7, 894.8,
     -32.93},
    {"CANADA", "default", 213.4, 321.1, 188.4, 474.1, 509.6, 361.1, 591.7,
     -30.1},
    {"JAPAN", "default", 473, 710.5, 548.4, 1138, 1258, 940.2, 1529, -75.4},
    {"BRAZIL", "default", 206.9, 455.9, 298.3, 647.3, 752.1, 444.3, 855.4,
     -27.11},
    {"RUSSIA", "default", 998.1, 157, 972.9, 1153, 1120, 1508, 1595, -58.16},
    {"INDIA", "default", 650.9, 480.7, 654.5, 1099, 1128, 1027, 1359, -109.5},
    {"CHINA", "CAS-as-G", 410.5, 397.1, 604.8, 805.3, 999, 830.8, 1187,
     -36.01},
    {"CHINA", "CAS-as-U", 152.2, 397.1, 252.5, 537, 649.2, 359.8, 724.9,
     -19.45},
    {"SOUTH AFRICA", "default", 176.1, 334.5, 338.4, 495.7, 672.1, 464.4,
     761.9, -21.35},
    {"INDONESIA", "default", 492.9, 704.4, 342.4, 1120, 1042, 730.7, 1270,
     -83.17},
    {"NETHERLANDS", "default", 172.8, 217.9, 242.1, 365.7, 459.3, 358.3, 527.6,
     -22.92},
    {"SOUTH KOREA", "default", 179.8, 359.6, 190.1, 519.2, 549.3, 304.5, 620.8,
     -22.55},
};

struct Table2Series {
  const char* country;
  const char* scenario;
  // windows 1971-1975 ... 2006-2010; NaN encodes n.a.
  double t[8];
};

inline constexpr double kNA = -1.0e99;  // sentinel, never a real value

inline constexpr Table2Series kTable2[] = {
    {"USA", "default",
     {-82.03, -88.34, -89.75, -85.7, -92.37, -53.03, -43.18, -33.71}},
    {"UK", "default",
     {-104.2, -101.8, -96.07, -81.15, -77.05, -47.69, -39.77, -34.41}},
    {"FRANCE", "default",
     {-120.9, -115.6, -128.2, -119.1, -105.4, -98.43, -93.58, -72.72}},
    {"GERMANY", "default",
     {-25.41, -93.11, -40.21, -109.3, -28.33, -22.71, -22.55, -18.35}},
    {"ITALY", "default",
     {-29.75, -24.83, -25.97, -29.37, -29.59, -28.89, -32.05, -31.71}},
    {"CANADA", "default",
     {-105.1, -111.8, -106.3, -87.51, -68.27, -49.81, -43.65, -35.22}},
    {"JAPAN", "default",
     {-113.2, -114.8, -116.5, -114.3, -106.6, -96.55, -87.16, -80.01}},
    {"BRAZIL", "default",
     {-52.05, -68.52, -118.4, -106.3, -79.09, -52.32, -38.27, -30.97}},
    {"RUSSIA", "default",
     {kNA, kNA, kNA, kNA, -61.54, -54.46, -45.23, -56.92}},
    {"INDIA", "default",
     {-101.9, -95.23, -106.7, -113.1, -118.7, -125.3, -124.2, -118.7}},
    {"CHINA", "CAS-as-G",
     {-173.9, -76.78, -80.53, -55.75, -47.13, -40.03, -30.29, -32.11}},
    {"CHINA", "CAS-as-U",
     {-173.9, -79.16, -80.11, -49.68, -44.35, -28.83, -15.34, -15.87}},
    {"SOUTH AFRICA", "default",
     {-79.44, -97.29, -88.21, -69.52, -47.32, -36.88, -32.17, -24.82}},
    {"INDONESIA", "default",
     {-229.7, -157.9, -157.6, -233, -135.9, -132.7, -125, -115}},
    {"NETHERLANDS", "default",
     {-26.16, -38.24, -44.66, -43.38, -53.3, -47.1, -35.58, -29.76}},
    {"SOUTH KOREA", "default",
     {-252.6, -48.52, -45.96, -17.21, -27.9, -19.91, -23.81, -25.91}},
};

inline constexpr Window kFiveYearWindows[8] = {
    {1971, 1975}, {1976, 1980}, {1981, 1985}, {1986, 1990},
    {1991, 1995}, {1996, 2000}, {2001, 2005}, {2006, 2010}};

}  // namespace detail

/// Static 2011 indicators: 16 entropy rows with the published T(UIG) kept as
/// a cross-check column.
inline const Dataset& reference_table1() {
  static const Dataset data = [] {
    Dataset d(Unit::mbit, "bundled reference data: 2011 static indicators");
    for (const auto& row : detail::kTable1) {
      EntropiesPayload p;
      p.h = EntropyProfile{{row.h_u, Unit::mbit},  {row.h_i, Unit::mbit},
                           {row.h_g, Unit::mbit},  {row.h_ui, Unit::mbit},
                           {row.h_ig, Unit::mbit}, {row.h_ug, Unit::mbit},
                           {row.h_uig, Unit::mbit}};
      p.t_uig = EntropyValue{row.t_uig, Unit::mbit};
      d.add(CountryWindowRecord{row.country, row.scenario, {2011, 2011}, p});
    }
    return d;
  }();
  return data;
}

/// T(UIG) series over eight five-year windows, 1971-2010.
inline const Dataset& reference_table2() {
  static const Dataset data = [] {
    Dataset d(Unit::mbit,
              "bundled reference data: 1971-2010 five-year T(UIG) series");
    for (const auto& series : detail::kTable2) {
      for (int w = 0; w < 8; ++w) {
        CountryWindowRecord r{series.country, series.scenario,
                              detail::kFiveYearWindows[w], std::nullopt};
        if (series.t[w] != detail::kNA)
          r.payload = TransmissionPayload{{series.t[w], Unit::mbit}};
        d.add(std::move(r));
      }
    }
    return d;
  }();
  return data;
}

}  // namespace trihelix
