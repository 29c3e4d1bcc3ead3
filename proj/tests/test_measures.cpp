#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "trihelix/counts.hpp"
#include "trihelix/measures.hpp"

using namespace trihelix;
using Catch::Matchers::WithinAbs;

namespace {

// Brute-force oracle, independent of the library's accumulation scheme.
double oracle_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

std::vector<double> random_dist(std::mt19937_64& rng, std::size_t n,
                                double zero_prob = 0.25) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) {
    v = uni(rng) < zero_prob ? 0.0 : uni(rng);
    sum += v;
  }
  if (sum == 0.0) {
    p[0] = 1.0;
    sum = 1.0;
  }
  for (auto& v : p) v /= sum;
  return p;
}

Joint3 random_joint3(std::mt19937_64& rng) {
  const auto p = random_dist(rng, 8);
  std::array<double, 8> cells{};
  std::copy(p.begin(), p.end(), cells.begin());
  return Joint3(cells);
}

// New axes (u,i,g) read from the old axes given by `perm`.
Joint3 permuted(const Joint3& j, const std::array<int, 3>& perm) {
  std::array<double, 8> cells{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        int old_coord[3];
        old_coord[perm[0]] = a;
        old_coord[perm[1]] = b;
        old_coord[perm[2]] = c;
        cells[Joint3::index(a, b, c)] =
            j.at(old_coord[0], old_coord[1], old_coord[2]);
      }
  return Joint3::unchecked(cells);
}

}  // namespace

TEST_CASE("entropy of simple distributions") {
  CHECK(entropy(ProbDist({0.5, 0.5})).value == 1.0);
  CHECK(entropy(ProbDist({1.0, 0.0})).value == 0.0);  // 0 log 0 convention
  CHECK(entropy(ProbDist({0.5, 0.25, 0.25})).value == 1.5);
}

TEST_CASE("entropy honors the requested unit") {
  CHECK(entropy(ProbDist({0.5, 0.5}), Unit::mbit).value == 1000.0);
  CHECK_THAT(entropy(ProbDist({0.5, 0.5}), Unit::nat).value,
             WithinAbs(0.6931471805599453, 1e-15));
}

TEST_CASE("invalid distributions are rejected") {
  CHECK_THROWS_AS(ProbDist({0.5, 0.6}), InvalidDistributionError);
  CHECK_THROWS_AS(ProbDist({-0.1, 1.1}), InvalidDistributionError);
  CHECK_THROWS_AS(ProbDist(std::vector<double>{}), InvalidDistributionError);
  CHECK_THROWS_AS(Joint2(2, 2, {0.5, 0.5, 0.5, 0.5}),
                  InvalidDistributionError);
  CHECK_THROWS_AS(Joint2(2, 2, {1.0}), InvalidDistributionError);
}

TEST_CASE("tiny drift is renormalized, larger drift is an error") {
  CHECK_NOTHROW(ProbDist({0.5, 0.5 + 5e-10}));
  CHECK_THROWS_AS(ProbDist({0.5, 0.5 + 5e-9}), InvalidDistributionError);
}

TEST_CASE("joint entropy of 2x2 tables and the uniform triple") {
  CHECK(joint_entropy(Joint2(2, 2, {0.25, 0.25, 0.25, 0.25})).value == 2.0);
  CHECK(joint_entropy(Joint2(2, 2, {0.5, 0.0, 0.0, 0.5})).value == 1.0);
  std::array<double, 8> uniform{};
  uniform.fill(0.125);
  CHECK(joint_entropy(Joint3(uniform)).value == 3.0);
}

TEST_CASE("conditional entropy via the chain rule") {
  CHECK(conditional_entropy(Joint2(2, 2, {0.25, 0.25, 0.25, 0.25}), Axis2::x)
            .value == 1.0);
  CHECK(conditional_entropy(Joint2(2, 2, {0.5, 0.0, 0.0, 0.5}), Axis2::x)
            .value == 0.0);

  const Joint2 j(2, 2, {0.4, 0.1, 0.1, 0.4});
  const double expected =
      oracle_entropy({0.4, 0.1, 0.1, 0.4}) - oracle_entropy({0.5, 0.5});
  CHECK_THAT(conditional_entropy(j, Axis2::x).value,
             WithinAbs(expected, 1e-12));
  CHECK_THAT(conditional_entropy(j, Axis2::x).value,
             WithinAbs(0.721928, 1e-6));
}

TEST_CASE("transmission2 on 2x2 tables") {
  CHECK(transmission2(Joint2(2, 2, {0.25, 0.25, 0.25, 0.25})).value == 0.0);
  CHECK(transmission2(Joint2(2, 2, {0.5, 0.0, 0.0, 0.5})).value == 1.0);

  const Joint2 j(2, 2, {0.4, 0.1, 0.1, 0.4});
  const double expected = oracle_entropy({0.5, 0.5}) * 2 -
                          oracle_entropy({0.4, 0.1, 0.1, 0.4});
  CHECK_THAT(transmission2(j).value, WithinAbs(expected, 1e-12));
  CHECK_THAT(transmission2(j).value, WithinAbs(0.278072, 1e-6));
}

TEST_CASE("configurational information sign semantics") {
  // three identical fair coins: fully redundant, +1 bit
  std::array<double, 8> redundant{};
  redundant[Joint3::index(0, 0, 0)] = 0.5;
  redundant[Joint3::index(1, 1, 1)] = 0.5;
  CHECK(configurational_information(Joint3(redundant)).value == 1.0);

  // uniform XOR: pairwise independent, jointly determined, -1 bit
  std::array<double, 8> parity{};
  parity[Joint3::index(0, 0, 0)] = 0.25;
  parity[Joint3::index(0, 1, 1)] = 0.25;
  parity[Joint3::index(1, 0, 1)] = 0.25;
  parity[Joint3::index(1, 1, 0)] = 0.25;
  CHECK(configurational_information(Joint3(parity)).value == -1.0);

  std::array<double, 8> uniform{};
  uniform.fill(0.125);
  CHECK(configurational_information(Joint3(uniform)).value == 0.0);
}

TEST_CASE("cells_to_joint3 places the seven cells") {
  const Joint3 thirds =
      cells_to_joint3(ExclusiveCells{1, 1, 1, 0, 0, 0, 0, std::nullopt});
  CHECK(thirds.at(1, 0, 0) == 1.0 / 3.0);
  CHECK(thirds.at(0, 1, 0) == 1.0 / 3.0);
  CHECK(thirds.at(0, 0, 1) == 1.0 / 3.0);
  CHECK(thirds.at(0, 0, 0) == 0.0);
  CHECK(thirds.at(1, 1, 1) == 0.0);

  const Joint3 single =
      cells_to_joint3(ExclusiveCells{0, 0, 0, 0, 0, 0, 5, std::nullopt});
  CHECK(single.at(1, 1, 1) == 1.0);

  const Joint3 mixed =
      cells_to_joint3(ExclusiveCells{5, 3, 2, 4, 1, 2, 1, std::nullopt});
  CHECK(mixed.at(1, 1, 1) == 1.0 / 18.0);
  CHECK(mixed.at(1, 0, 0) == 5.0 / 18.0);
  CHECK(mixed.at(0, 1, 0) == 3.0 / 18.0);
  CHECK(mixed.at(1, 1, 0) == 4.0 / 18.0);
  CHECK(mixed.at(0, 1, 1) == 2.0 / 18.0);
}

TEST_CASE("cells_to_joint3 universe policies") {
  CHECK_THROWS_AS(cells_to_joint3(ExclusiveCells{}), EmptyUniverseError);
  CHECK_THROWS_AS(
      cells_to_joint3(ExclusiveCells{1, 1, 0, 0, 0, 0, 0, std::nullopt},
                      UniversePolicy::with_none(1)),
      InvalidDistributionError);

  const Joint3 with_none =
      cells_to_joint3(ExclusiveCells{1, 1, 0, 0, 0, 0, 0, std::nullopt},
                      UniversePolicy::with_none(4));
  CHECK(with_none.at(0, 0, 0) == 0.5);
  CHECK(with_none.at(1, 0, 0) == 0.25);
}

TEST_CASE("indicator_set reproduces published rows within their rounding") {
  const auto mbit = [](double v) { return EntropyValue{v, Unit::mbit}; };
  const EntropyProfile usa{mbit(254.1), mbit(215.4), mbit(362.9), mbit(451),
                           mbit(578.1), mbit(508.6), mbit(675.4)};
  const IndicatorSet s = indicator_set(usa, Unit::mbit);
  CHECK_THAT(s.t_uig.value, WithinAbs(-29.9, 1e-9));   // arithmetic identity
  CHECK_THAT(s.t_uig.value, WithinAbs(-29.96, 0.4));   // published value
  CHECK_THAT(s.t_ui.value, WithinAbs(254.1 + 215.4 - 451.0, 1e-9));

  const EntropyProfile uk{mbit(225.3), mbit(280.3), mbit(186.9), mbit(439.1),
                          mbit(467),   mbit(362.3), mbit(542.5)};
  CHECK_THAT(indicator_set(uk, Unit::mbit).t_uig.value,
             WithinAbs(-33.4, 1e-9));
}

TEST_CASE("indicator_set on a single-cell universe is all zero") {
  const IndicatorSet s =
      indicator_set(ExclusiveCells{0, 0, 0, 0, 0, 0, 5, std::nullopt});
  for (const EntropyValue* v :
       {&s.h_u, &s.h_i, &s.h_g, &s.h_ui, &s.h_ug, &s.h_ig, &s.h_uig, &s.t_ui,
        &s.t_ug, &s.t_ig, &s.t_uig})
    CHECK(v->value == 0.0);
}

TEST_CASE("unit conversions are exact scalings") {
  CHECK(convert_unit({1.0, Unit::bit}, Unit::mbit).value == 1000.0);
  CHECK(convert_unit({0.0, Unit::nat}, Unit::bit).value == 0.0);
  CHECK_THAT(convert_unit({1.0, Unit::bit}, Unit::nat).value,
             WithinAbs(0.693147, 1e-6));

  std::mt19937_64 rng(0x5eed0101);
  std::uniform_real_distribution<double> uni(-200.0, 200.0);
  for (int k = 0; k < 1000; ++k) {
    const EntropyValue v{uni(rng), Unit::bit};
    for (Unit u : {Unit::mbit, Unit::nat}) {
      const EntropyValue back = convert_unit(convert_unit(v, u), Unit::bit);
      CHECK_THAT(back.value, WithinAbs(v.value, 1e-12));
    }
  }
}

TEST_CASE("entropy bounds on random distributions", "[property]") {
  std::mt19937_64 rng(0x5eed0102);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int k = 0; k < 4000; ++k) {
    const std::size_t n = size(rng);
    const ProbDist d(random_dist(rng, n));
    const double h = entropy(d).value;
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(static_cast<double>(n)) + 1e-9);
    CHECK_THAT(h, WithinAbs(oracle_entropy(d.values()), 1e-12));
  }
}

TEST_CASE("chain rule holds in both directions", "[property]") {
  std::mt19937_64 rng(0x5eed0103);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int k = 0; k < 4000; ++k) {
    const std::size_t nx = size(rng), ny = size(rng);
    const Joint2 j(nx, ny, random_dist(rng, nx * ny));
    const double hxy = joint_entropy(j).value;
    const double hx = entropy(j.marginal(Axis2::x)).value;
    const double hy = entropy(j.marginal(Axis2::y)).value;
    CHECK_THAT(hxy, WithinAbs(hx + conditional_entropy(j, Axis2::x).value,
                              1e-9));
    CHECK_THAT(hxy, WithinAbs(hy + conditional_entropy(j, Axis2::y).value,
                              1e-9));
    CHECK(conditional_entropy(j, Axis2::x).value >= -1e-9);
    CHECK(conditional_entropy(j, Axis2::y).value >= -1e-9);
  }
}

TEST_CASE("transmission is non-negative and vanishes on product joints",
          "[property]") {
  std::mt19937_64 rng(0x5eed0104);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int k = 0; k < 4000; ++k) {
    const std::size_t nx = size(rng), ny = size(rng);
    const Joint2 j(nx, ny, random_dist(rng, nx * ny));
    const double t = transmission2(j).value;
    CHECK(t >= -1e-9);
    // Eq-(2)-style consistency: T = H(X) - H(X|Y)
    const double hx = entropy(j.marginal(Axis2::x)).value;
    CHECK_THAT(t, WithinAbs(hx - conditional_entropy(j, Axis2::y).value,
                            1e-9));

    const auto px = random_dist(rng, nx, 0.0);
    const auto py = random_dist(rng, ny, 0.0);
    std::vector<double> prod(nx * ny);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) prod[x * ny + y] = px[x] * py[y];
    CHECK_THAT(transmission2(Joint2(nx, ny, prod)).value, WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("configurational information is exactly permutation symmetric",
          "[property]") {
  std::mt19937_64 rng(0x5eed0105);
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                 {0, 2, 1},
                                                 {1, 0, 2},
                                                 {1, 2, 0},
                                                 {2, 0, 1},
                                                 {2, 1, 0}}};
  for (int k = 0; k < 2000; ++k) {
    const Joint3 j = random_joint3(rng);
    const double t = configurational_information(j).value;
    for (const auto& perm : perms)
      CHECK(configurational_information(permuted(j, perm)).value == t);
  }
}

TEST_CASE("T(UIG) equals T(U,I) minus T(U,I|G)", "[property]") {
  std::mt19937_64 rng(0x5eed0106);
  for (int k = 0; k < 4000; ++k) {
    const Joint3 j = random_joint3(rng);
    const double t3 = configurational_information(j).value;
    const double t_ui = transmission2(j.pairwise(Axis::u, Axis::i)).value;
    const double t_ui_g = conditional_transmission(j, Axis::g).value;
    CHECK_THAT(t3, WithinAbs(t_ui - t_ui_g, 1e-9));
  }
}

TEST_CASE("indicator set satisfies its internal identities", "[property]") {
  std::mt19937_64 rng(0x5eed0107);
  std::uniform_int_distribution<std::int64_t> cell(0, 40);
  for (int k = 0; k < 2000; ++k) {
    ExclusiveCells cells{cell(rng), cell(rng), cell(rng), cell(rng),
                         cell(rng), cell(rng), cell(rng), std::nullopt};
    if (cells.union_total() == 0) cells.u = 1;
    const IndicatorSet s = indicator_set(cells);

    CHECK_THAT(s.t_uig.value,
               WithinAbs(s.h_u.value + s.h_i.value + s.h_g.value -
                             s.h_ui.value - s.h_ug.value - s.h_ig.value +
                             s.h_uig.value,
                         1e-9));
    CHECK(s.t_ui.value >= -1e-9);
    CHECK(s.t_ug.value >= -1e-9);
    CHECK(s.t_ig.value >= -1e-9);

    // max(H(X),H(Y)) <= H(XY) <= H(X)+H(Y), all three pairs
    const struct {
      double a, b, ab;
    } pairs[] = {{s.h_u.value, s.h_i.value, s.h_ui.value},
                 {s.h_u.value, s.h_g.value, s.h_ug.value},
                 {s.h_i.value, s.h_g.value, s.h_ig.value}};
    for (const auto& p : pairs) {
      CHECK(p.ab >= std::max(p.a, p.b) - 1e-9);
      CHECK(p.ab <= p.a + p.b + 1e-9);
    }

    // dual route: transmissions from the joint agree with the H combination
    const Joint3 j = cells_to_joint3(cells);
    CHECK_THAT(s.t_ui.value,
               WithinAbs(transmission2(j.pairwise(Axis::u, Axis::i)).value,
                         1e-9));
    CHECK_THAT(s.t_uig.value,
               WithinAbs(configurational_information(j).value, 1e-9));
  }
}
