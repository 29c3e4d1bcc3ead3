// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "trihelix/trihelix.hpp"

using namespace trihelix;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool pass,
            const std::string& detail = "") {
  std::printf("criterion %d [%s]: %s%s%s\n", criterion,
              pass ? "PASS" : "FAIL", name, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) ++g_failures;
}

double brute_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

// --- criterion 1: Table 1 identity within +/-0.4 mbit on all 16 rows ------

void criterion_1() {
  bool pass = true;
  std::string detail;
  int checked = 0;
  for (const auto& r : reference_table1().records()) {
    const auto& p = std::get<EntropiesPayload>(*r.payload);
    const double combined = indicator_set(p.h, Unit::mbit).t_uig.value;
    const double printed = p.t_uig->value;
    ++checked;
    if (std::abs(combined - printed) > 0.4) {
      pass = false;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "%s: combined %.2f vs printed %.2f (|delta| = %.2f mbit "
                    "> 0.4)",
                    r.key().c_str(), combined, printed,
                    std::abs(combined - printed));
      if (!detail.empty()) detail += "; ";
      detail += buf;
    }
  }
  // spot values as published
  const auto spot = [&](const char* country, const char* scenario,
                        double expected) {
    const auto* rec = reference_table1().find(country, scenario, {2011, 2011});
    if (!rec) return false;
    return std::get<EntropiesPayload>(*rec->payload).t_uig->value == expected;
  };
  if (!spot("USA", "default", -29.96) || !spot("UK", "default", -33.4) ||
      !spot("GERMANY", "default", -16.09) || !spot("INDIA", "default", -109.5))
    pass = false;
  if (checked != 16) pass = false;
  report(1, "Table 1 identity within +/-0.4 mbit, 16 rows", pass, detail);
}

// --- criterion 2: ranking order on the bundled 2011 table -----------------

void criterion_2() {
  const auto entries =
      rank_by_synergy(reference_table1().at_window({2011, 2011}));
  const std::array<const char*, 16> expected = {
      "INDIA",        "INDONESIA",       "JAPAN",           "FRANCE",
      "RUSSIA",       "CHINA(CAS-as-G)", "UK",              "ITALY",
      "CANADA",       "USA",             "BRAZIL",          "NETHERLANDS",
      "SOUTH KOREA",  "SOUTH AFRICA",    "CHINA(CAS-as-U)", "GERMANY"};
  bool pass = entries.size() == 16;
  std::string detail;
  if (pass) {
    for (std::size_t k = 0; k < 16; ++k) {
      if (entries[k].key != expected[k] ||
          entries[k].position != static_cast<int>(k) + 1) {
        pass = false;
        detail = "position " + std::to_string(k + 1) + " is " +
                 entries[k].key + ", expected " + expected[k];
        break;
      }
    }
  }
  pass = pass && entries.front().key == std::string("INDIA") &&
         entries.back().key == std::string("GERMANY") &&
         entries[14].key == std::string("CHINA(CAS-as-U)");
  report(2, "ranking: INDIA first, GERMANY last, CHINA(CAS-as-U) 15th of 16",
         pass, detail);
}

// --- criterion 3: trend classification on the bundled series --------------

void criterion_3() {
  const Dataset& t2 = reference_table2();
  bool pass = true;
  std::string detail;
  const auto expect_toward = [&](const char* country, const char* scenario) {
    const Trend got = trend(t2.series(country, scenario)).classification;
    if (got != Trend::toward_zero) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += std::string(country) + " classified " +
                std::string(trend_name(got));
    }
  };
  expect_toward("USA", "default");
  expect_toward("UK", "default");
  expect_toward("JAPAN", "default");
  expect_toward("BRAZIL", "default");
  expect_toward("SOUTH AFRICA", "default");
  expect_toward("CHINA", "CAS-as-G");
  expect_toward("CHINA", "CAS-as-U");

  const auto india = trend(t2.series("INDIA", "default"));
  if (india.classification != Trend::away_from_zero &&
      india.classification != Trend::mixed) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "INDIA classified " +
              std::string(trend_name(india.classification));
  }
  const auto usa = trend(t2.series("USA", "default"));
  pass = pass && usa.first_value->value == -82.03 &&
         usa.last_value->value == -33.71;
  report(3, "trends: toward-zero for 7 series, INDIA away-from-zero/mixed",
         pass, detail);
}

// --- criterion 4: China scenario deltas ------------------------------------

void criterion_4() {
  const Dataset& t2 = reference_table2();
  const auto cmp = compare_scenarios(t2.series("CHINA", "CAS-as-G"),
                                     t2.series("CHINA", "CAS-as-U"));
  const ScenarioDelta* d2001 = nullptr;
  const ScenarioDelta* d1971 = nullptr;
  for (const auto& d : cmp.deltas) {
    if (d.window == Window{2001, 2005}) d2001 = &d;
    if (d.window == Window{1971, 1975}) d1971 = &d;
  }
  bool pass = d2001 && d1971;
  std::string detail;
  if (pass) {
    pass = std::abs(d2001->delta.value - 14.95) <= 1e-12 &&
           d1971->delta.value == 0.0 && d2001->a.value == -30.29 &&
           d2001->b.value == -15.34;
    if (!pass) {
      char buf[120];
      std::snprintf(buf, sizeof buf, "2001-2005 delta = %.17g, 1971-1975 = %g",
                    d2001->delta.value, d1971->delta.value);
      detail = buf;
    }
  }
  report(4, "scenario deltas: China 2001-2005 = +14.95 mbit, 1971-1975 = 0",
         pass, detail);
}

// --- criterion 5: overlap-correction oracle, 10000 random multisets -------

void criterion_5() {
  std::mt19937_64 rng(0xacce5501);
  std::uniform_int_distribution<std::int64_t> cell(0, 500);
  std::uniform_int_distribution<std::int64_t> big(0, 1000000000);
  bool pass = true;
  std::string detail;

  for (int iter = 0; iter < 10000 && pass; ++iter) {
    // labeled multiset indexed by sector bitmask u=4 i=2 g=1
    std::array<std::int64_t, 8> docs{};
    for (int mask = 1; mask < 8; ++mask)
      docs[static_cast<std::size_t>(mask)] = cell(rng);

    InclusiveCounts c;
    for (int mask = 1; mask < 8; ++mask) {
      const bool u = mask & 4, i = mask & 2, g = mask & 1;
      const std::int64_t n = docs[static_cast<std::size_t>(mask)];
      if (u) c.u0 += n;
      if (i) c.i0 += n;
      if (g) c.g0 += n;
      if (u && i) c.ui0 += n;
      if (u && g) c.ug0 += n;
      if (i && g) c.ig0 += n;
      if (u && i && g) c.uig0 += n;
    }
    ExclusiveCells expected;
    expected.u = docs[4];
    expected.i = docs[2];
    expected.g = docs[1];
    expected.ui = docs[6];
    expected.ug = docs[5];
    expected.ig = docs[3];
    expected.uig = docs[7];

    if (!(to_exclusive(c) == expected) || !(to_inclusive(expected) == c)) {
      pass = false;
      detail = "multiset mismatch at iteration " + std::to_string(iter);
    }

    // exact round-trip on large random cell vectors
    const ExclusiveCells x{big(rng), big(rng), big(rng), big(rng),
                           big(rng), big(rng), big(rng), std::nullopt};
    if (!(to_exclusive(to_inclusive(x)) == x)) {
      pass = false;
      detail = "round-trip mismatch at iteration " + std::to_string(iter);
    }
  }
  report(5, "overlap-correction oracle equivalence, 10000 random multisets",
         pass, detail);
}

// --- criterion 6: information-theory property suite ------------------------

void criterion_6() {
  std::mt19937_64 rng(0xacce5502);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  bool pass = true;
  std::string detail;

  const auto random_mass = [&](std::size_t n) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& v : p) {
      v = uni(rng) < 0.25 ? 0.0 : uni(rng);
      sum += v;
    }
    if (sum == 0.0) {
      p[0] = 1.0;
      sum = 1.0;
    }
    for (auto& v : p) v /= sum;
    return p;
  };
  const auto fail = [&](const char* what, int iter) {
    if (pass) detail = std::string(what) + " at iteration " +
                       std::to_string(iter);
    pass = false;
  };

  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  for (int iter = 0; iter < 10000 && pass; ++iter) {
    // entropy bounds
    const std::size_t n = size(rng);
    const ProbDist d(random_mass(n));
    const double h = entropy(d).value;
    if (h < 0.0 || h > std::log2(static_cast<double>(n)) + 1e-9)
      fail("entropy bounds", iter);

    // chain rule on a random pairwise joint
    const std::size_t nx = size(rng), ny = size(rng);
    const Joint2 j(nx, ny, random_mass(nx * ny));
    const double hxy = joint_entropy(j).value;
    const double hx = entropy(j.marginal(Axis2::x)).value;
    const double hy = entropy(j.marginal(Axis2::y)).value;
    if (std::abs(hxy - hx - conditional_entropy(j, Axis2::x).value) > 1e-9 ||
        std::abs(hxy - hy - conditional_entropy(j, Axis2::y).value) > 1e-9)
      fail("chain rule", iter);

    // transmission non-negative; zero on product joints
    if (transmission2(j).value < -1e-9) fail("transmission >= 0", iter);
    const auto px = random_mass(nx);
    const auto py = random_mass(ny);
    std::vector<double> prod(nx * ny);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) prod[x * ny + y] = px[x] * py[y];
    if (std::abs(transmission2(Joint2(nx, ny, prod)).value) > 1e-9)
      fail("transmission zero on product joint", iter);

    // signed three-way measure: permutation symmetry and decomposition
    std::array<double, 8> cells{};
    {
      const auto mass = random_mass(8);
      std::copy(mass.begin(), mass.end(), cells.begin());
    }
    const Joint3 triple(cells);
    const double t3 = configurational_information(triple).value;
    for (const auto& perm : perms) {
      std::array<double, 8> permuted{};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) {
            int coord[3];
            coord[perm[0]] = a;
            coord[perm[1]] = b;
            coord[perm[2]] = c;
            permuted[Joint3::index(a, b, c)] =
                triple.at(coord[0], coord[1], coord[2]);
          }
      if (std::abs(configurational_information(Joint3::unchecked(permuted))
                       .value -
                   t3) > 1e-9)
        fail("permutation symmetry", iter);
    }
    const double t_ui = transmission2(triple.pairwise(Axis::u, Axis::i)).value;
    const double t_ui_g = conditional_transmission(triple, Axis::g).value;
    if (std::abs(t3 - (t_ui - t_ui_g)) > 1e-9)
      fail("T(UIG) = T(U,I) - T(U,I|G)", iter);
  }
  report(6, "information-theory properties, 10000 random cases", pass, detail);
}

// --- criterion 7: sign semantics -------------------------------------------

void criterion_7() {
  std::array<double, 8> redundant{};
  redundant[Joint3::index(0, 0, 0)] = 0.5;
  redundant[Joint3::index(1, 1, 1)] = 0.5;
  const double plus = configurational_information(Joint3(redundant)).value;

  std::array<double, 8> parity{};
  parity[Joint3::index(0, 0, 0)] = 0.25;
  parity[Joint3::index(0, 1, 1)] = 0.25;
  parity[Joint3::index(1, 0, 1)] = 0.25;
  parity[Joint3::index(1, 1, 0)] = 0.25;
  const double minus = configurational_information(Joint3(parity)).value;

  // independent oracle: evaluate all seven H terms by brute force
  const auto oracle = [&](const std::array<double, 8>& cells) {
    const auto marg = [&](int axis) {
      std::vector<double> m(2, 0.0);
      for (int u = 0; u < 2; ++u)
        for (int i = 0; i < 2; ++i)
          for (int g = 0; g < 2; ++g) {
            const int coord[3] = {u, i, g};
            m[static_cast<std::size_t>(coord[axis])] +=
                cells[Joint3::index(u, i, g)];
          }
      return m;
    };
    const auto pair = [&](int a1, int a2) {
      std::vector<double> m(4, 0.0);
      for (int u = 0; u < 2; ++u)
        for (int i = 0; i < 2; ++i)
          for (int g = 0; g < 2; ++g) {
            const int coord[3] = {u, i, g};
            m[static_cast<std::size_t>(coord[a1] * 2 + coord[a2])] +=
                cells[Joint3::index(u, i, g)];
          }
      return m;
    };
    return brute_entropy(marg(0)) + brute_entropy(marg(1)) +
           brute_entropy(marg(2)) - brute_entropy(pair(0, 1)) -
           brute_entropy(pair(0, 2)) - brute_entropy(pair(1, 2)) +
           brute_entropy(std::vector<double>(cells.begin(), cells.end()));
  };

  const bool pass = std::abs(plus - 1.0) <= 1e-9 &&
                    std::abs(minus + 1.0) <= 1e-9 &&
                    std::abs(oracle(redundant) - 1.0) <= 1e-9 &&
                    std::abs(oracle(parity) + 1.0) <= 1e-9;
  char buf[80];
  std::snprintf(buf, sizeof buf, "redundant = %+.12f, parity = %+.12f", plus,
                minus);
  report(7, "sign semantics: redundant triple +1 bit, XOR joint -1 bit", pass,
         buf);
}

// --- criterion 8: query-plan byte-exactness ---------------------------------

void criterion_8() {
  const QueryPlan usa = build_plan("USA", 2011, 2011);
  const QueryPlan uk = build_plan("UK", 2011, 2011);
  const bool pass =
      usa.steps[0].text.find("AD=(USA SAME (UNIV* OR COLL*))") !=
          std::string::npos &&
      uk.steps[0].text.find(
          "(England OR Scotland OR Wales OR North Ireland)") !=
          std::string::npos &&
      usa.steps[5].text == "#3 NOT #4 NOT #5" &&
      usa.steps[9].text == "#1 AND #2 AND #6";
  report(8, "query plans: USA #1 fragment, UK expansion, #6 derivation", pass);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
