#pragma once

//
// Shannon measures over sector membership distributions:
//
//   entropy                      H(X)  = -sum p log2 p
//   joint_entropy                H(X,Y), H(U,I,G)
//   conditional_entropy          H(Y|X) = H(X,Y) - H(X)
//   transmission2                T(X,Y) = H(X) + H(Y) - H(X,Y)
//   configurational_information  T(UIG) = H(U)+H(I)+H(G)
//                                         -H(UI)-H(UG)-H(IG)+H(UIG)
//
// T(UIG) is a signed measure: negative values indicate synergy (uncertainty
// reduction among the three spheres), positive values differentiation.
// Internal arithmetic is base-2 (bits) with 0 log 0 = 0; mbit and nat are
// display scalings.
//

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trihelix/counts.hpp"
#include "trihelix/detail.hpp"
#include "trihelix/errors.hpp"
#include "trihelix/units.hpp"

namespace trihelix {

/// Distributions must sum to 1 within this tolerance; smaller drift is
/// renormalized away, larger drift is an error.
inline constexpr double kProbTolerance = 1e-9;

namespace detail {

inline void check_probabilities(std::vector<double>& p, const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0))
      throw InvalidDistributionError(std::string(what) +
                                     ": negative or non-finite entry " +
                                     format_full(v));
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbTolerance)
    throw InvalidDistributionError(std::string(what) + ": mass sums to " +
                                   format_full(sum) + ", expected 1");
  if (sum != 1.0)
    for (double& v : p) v /= sum;
}

// Entropy in bits of an already-normalized cell collection.
inline double entropy_bits(const std::vector<double>& p) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double v : p)
    if (v > 0.0) terms.push_back(-v * std::log2(v));
  return sorted_sum(std::move(terms));
}

}  // namespace detail

/// A discrete distribution; validated (and renormalized) on construction.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probabilities)
      : p_(std::move(probabilities)) {
    detail::check_probabilities(p_, "ProbDist");
  }

  /// For internal, already-normalized mass vectors.
  static ProbDist unchecked(std::vector<double> probabilities) {
    ProbDist d;
    d.p_ = std::move(probabilities);
    return d;
  }

  const std::vector<double>& values() const { return p_; }
  std::size_t size() const { return p_.size(); }

 private:
  ProbDist() = default;
  std::vector<double> p_;
};

enum class Axis2 { x, y };

/// Joint distribution of a pair of discrete variables, row-major in x.
class Joint2 {
 public:
  Joint2(std::size_t nx, std::size_t ny, std::vector<double> cells)
      : nx_(nx), ny_(ny), p_(std::move(cells)) {
    if (p_.size() != nx_ * ny_)
      throw InvalidDistributionError("Joint2: expected " +
                                     std::to_string(nx_ * ny_) + " cells, got " +
                                     std::to_string(p_.size()));
    detail::check_probabilities(p_, "Joint2");
  }

  static Joint2 unchecked(std::size_t nx, std::size_t ny,
                          std::vector<double> cells) {
    Joint2 j;
    j.nx_ = nx;
    j.ny_ = ny;
    j.p_ = std::move(cells);
    return j;
  }

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double at(std::size_t x, std::size_t y) const { return p_[x * ny_ + y]; }
  const std::vector<double>& cells() const { return p_; }

  ProbDist marginal(Axis2 axis) const {
    const std::size_t n = axis == Axis2::x ? nx_ : ny_;
    const std::size_t m = axis == Axis2::x ? ny_ : nx_;
    std::vector<double> out(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<double> terms(m);
      for (std::size_t b = 0; b < m; ++b)
        terms[b] = axis == Axis2::x ? at(a, b) : at(b, a);
      out[a] = detail::sorted_sum(std::move(terms));
    }
    return ProbDist::unchecked(std::move(out));
  }

 private:
  Joint2() = default;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<double> p_;
};

enum class Axis { u, i, g };

/// Joint distribution over the binary triple (u, i, g).
class Joint3 {
 public:
  explicit Joint3(std::array<double, 8> cells) : p_(cells) {
    std::vector<double> v(p_.begin(), p_.end());
    detail::check_probabilities(v, "Joint3");
    std::copy(v.begin(), v.end(), p_.begin());
  }

  static Joint3 unchecked(std::array<double, 8> cells) {
    Joint3 j;
    j.p_ = cells;
    return j;
  }

  static std::size_t index(int u, int i, int g) {
    return static_cast<std::size_t>(u * 4 + i * 2 + g);
  }

  double at(int u, int i, int g) const { return p_[index(u, i, g)]; }
  const std::array<double, 8>& cells() const { return p_; }

  std::array<double, 2> marginal(Axis axis) const {
    std::array<double, 2> out{};
    for (int v = 0; v < 2; ++v) {
      std::array<double, 4> terms{};
      std::size_t k = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) terms[k++] = p_[cell_index(axis, v, a, b)];
      out[static_cast<std::size_t>(v)] = detail::sorted_sum(terms);
    }
    return out;
  }

  /// 2x2 joint of two axes, the third summed out.
  Joint2 pairwise(Axis first, Axis second) const {
    std::vector<double> cells(4);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        // two-term sums are order-independent
        cells[static_cast<std::size_t>(x * 2 + y)] =
            pair_cell(first, second, x, y, 0) + pair_cell(first, second, x, y, 1);
      }
    return Joint2::unchecked(2, 2, std::move(cells));
  }

 private:
  Joint3() = default;

  // Cell index with `axis` fixed to v and the remaining axes (in u,i,g
  // order) taking a and b.
  static std::size_t cell_index(Axis axis, int v, int a, int b) {
    switch (axis) {
      case Axis::u:
        return index(v, a, b);
      case Axis::i:
        return index(a, v, b);
      case Axis::g:
        return index(a, b, v);
    }
    return 0;
  }

  double pair_cell(Axis first, Axis second, int x, int y, int t) const {
    int c[3] = {0, 0, 0};
    c[static_cast<int>(first)] = x;
    c[static_cast<int>(second)] = y;
    const int third = 3 - static_cast<int>(first) - static_cast<int>(second);
    c[third] = t;
    return p_[index(c[0], c[1], c[2])];
  }

  std::array<double, 8> p_;
};

inline EntropyValue entropy(const ProbDist& d, Unit unit = Unit::bit) {
  const double bits = detail::entropy_bits(d.values());
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

inline EntropyValue joint_entropy(const Joint2& j, Unit unit = Unit::bit) {
  const double bits = detail::entropy_bits(j.cells());
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

inline EntropyValue joint_entropy(const Joint3& j, Unit unit = Unit::bit) {
  const double bits = detail::entropy_bits(
      std::vector<double>(j.cells().begin(), j.cells().end()));
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

/// H(other | given) = H(X,Y) - H(given), via the chain rule.
inline EntropyValue conditional_entropy(const Joint2& j, Axis2 given,
                                        Unit unit = Unit::bit) {
  const double bits = detail::entropy_bits(j.cells()) -
                      detail::entropy_bits(j.marginal(given).values());
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

/// Two-way transmission (mutual information); non-negative up to rounding.
inline EntropyValue transmission2(const Joint2& j, Unit unit = Unit::bit) {
  const double bits = detail::entropy_bits(j.marginal(Axis2::x).values()) +
                      detail::entropy_bits(j.marginal(Axis2::y).values()) -
                      detail::entropy_bits(j.cells());
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

/// The seven entropies of a triple, in bits unless asked otherwise.
/// Field order follows the indicator table convention.
struct EntropyProfile {
  EntropyValue h_u, h_i, h_g, h_ui, h_ig, h_ug, h_uig;

  friend bool operator==(const EntropyProfile&,
                         const EntropyProfile&) = default;
};

inline EntropyProfile entropy_profile(const Joint3& j, Unit unit = Unit::bit) {
  const auto h1 = [&](Axis a) {
    const auto m = j.marginal(a);
    return detail::entropy_bits({m[0], m[1]});
  };
  const auto h2 = [&](Axis a, Axis b) {
    return detail::entropy_bits(j.pairwise(a, b).cells());
  };
  EntropyProfile p{
      {h1(Axis::u), Unit::bit},
      {h1(Axis::i), Unit::bit},
      {h1(Axis::g), Unit::bit},
      {h2(Axis::u, Axis::i), Unit::bit},
      {h2(Axis::i, Axis::g), Unit::bit},
      {h2(Axis::u, Axis::g), Unit::bit},
      {detail::entropy_bits(
           std::vector<double>(j.cells().begin(), j.cells().end())),
       Unit::bit}};
  if (unit != Unit::bit) {
    for (EntropyValue* v : {&p.h_u, &p.h_i, &p.h_g, &p.h_ui, &p.h_ig, &p.h_ug,
                            &p.h_uig})
      *v = convert_unit(*v, unit);
  }
  return p;
}

namespace detail {

// Signed three-way combination. Grouping the positive and negative triads
// through sorted sums keeps the result bit-identical under any axis
// permutation.
inline double combine_t_uig_bits(double hu, double hi, double hg, double hui,
                                 double hug, double hig, double huig) {
  return sorted_sum(std::array{hu, hi, hg}) -
         sorted_sum(std::array{hui, hug, hig}) + huig;
}

}  // namespace detail

/// Signed mutual information in three dimensions.
inline EntropyValue configurational_information(const Joint3& j,
                                                Unit unit = Unit::bit) {
  const EntropyProfile p = entropy_profile(j);
  const double bits = detail::combine_t_uig_bits(
      p.h_u.value, p.h_i.value, p.h_g.value, p.h_ui.value, p.h_ug.value,
      p.h_ig.value, p.h_uig.value);
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

/// T(X,Y | given) = sum_z p(z) T(X,Y | given = z).
inline EntropyValue conditional_transmission(const Joint3& j, Axis given,
                                             Unit unit = Unit::bit) {
  const Axis others[2] = {given == Axis::u ? Axis::i : Axis::u,
                          given == Axis::g ? Axis::i : Axis::g};
  const auto pz = j.marginal(given);
  double bits = 0.0;
  for (int z = 0; z < 2; ++z) {
    const double mass = pz[static_cast<std::size_t>(z)];
    if (mass <= 0.0) continue;
    std::vector<double> slice(4);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        int c[3] = {0, 0, 0};
        c[static_cast<int>(others[0])] = x;
        c[static_cast<int>(others[1])] = y;
        c[static_cast<int>(given)] = z;
        slice[static_cast<std::size_t>(x * 2 + y)] =
            j.at(c[0], c[1], c[2]) / mass;
      }
    bits +=
        mass * transmission2(Joint2::unchecked(2, 2, std::move(slice))).value;
  }
  return convert_unit(EntropyValue{bits, Unit::bit}, unit);
}

/// Whether the (0,0,0) cell carries mass. The retrieval only measures the
/// three sectors, so union-only (zero mass outside them) is the default;
/// with_none adds a none-of-the-three cell from a known universe total.
struct UniversePolicy {
  enum class Mode { union_only, with_none };

  Mode mode = Mode::union_only;
  std::int64_t total = 0;

  static UniversePolicy union_only() { return {}; }
  static UniversePolicy with_none(std::int64_t total) {
    return {Mode::with_none, total};
  }
};

inline Joint3 cells_to_joint3(
    const ExclusiveCells& cells,
    const UniversePolicy& policy = UniversePolicy::union_only()) {
  const std::int64_t cell_values[7] = {cells.u,  cells.i,  cells.g, cells.ui,
                                       cells.ug, cells.ig, cells.uig};
  for (std::int64_t v : cell_values)
    if (v < 0) throw NegativeCellError("cell count " + std::to_string(v) +
                                       " is negative");
  const std::int64_t uni = cells.union_total();
  std::int64_t n = uni;
  std::int64_t none = 0;
  if (policy.mode == UniversePolicy::Mode::with_none) {
    if (policy.total < uni)
      throw InvalidDistributionError(
          "universe total " + std::to_string(policy.total) +
          " is smaller than the union of cells " + std::to_string(uni));
    n = policy.total;
    none = policy.total - uni;
  }
  if (n == 0) throw EmptyUniverseError("probability universe is empty");

  const double dn = static_cast<double>(n);
  std::array<double, 8> p{};
  p[Joint3::index(0, 0, 0)] = static_cast<double>(none) / dn;
  p[Joint3::index(1, 0, 0)] = static_cast<double>(cells.u) / dn;
  p[Joint3::index(0, 1, 0)] = static_cast<double>(cells.i) / dn;
  p[Joint3::index(0, 0, 1)] = static_cast<double>(cells.g) / dn;
  p[Joint3::index(1, 1, 0)] = static_cast<double>(cells.ui) / dn;
  p[Joint3::index(1, 0, 1)] = static_cast<double>(cells.ug) / dn;
  p[Joint3::index(0, 1, 1)] = static_cast<double>(cells.ig) / dn;
  p[Joint3::index(1, 1, 1)] = static_cast<double>(cells.uig) / dn;
  return Joint3::unchecked(p);
}

/// The full indicator row: seven entropies plus the four transmissions.
struct IndicatorSet {
  EntropyValue h_u, h_i, h_g, h_ui, h_ug, h_ig, h_uig;
  EntropyValue t_ui, t_ug, t_ig, t_uig;

  IndicatorSet in_unit(Unit unit) const {
    IndicatorSet out = *this;
    for (EntropyValue* v :
         {&out.h_u, &out.h_i, &out.h_g, &out.h_ui, &out.h_ug, &out.h_ig,
          &out.h_uig, &out.t_ui, &out.t_ug, &out.t_ig, &out.t_uig})
      *v = convert_unit(*v, unit);
    return out;
  }

  friend bool operator==(const IndicatorSet&, const IndicatorSet&) = default;
};

/// Builds the indicator row from seven entropies. The transmissions come
/// straight from the H values; with rounded published entropies a bilateral
/// T can land a hair below zero, and is reported as computed.
inline IndicatorSet indicator_set(const EntropyProfile& h,
                                  Unit unit = Unit::bit) {
  const double hu = h.h_u.in(Unit::bit);
  const double hi = h.h_i.in(Unit::bit);
  const double hg = h.h_g.in(Unit::bit);
  const double hui = h.h_ui.in(Unit::bit);
  const double hig = h.h_ig.in(Unit::bit);
  const double hug = h.h_ug.in(Unit::bit);
  const double huig = h.h_uig.in(Unit::bit);

  IndicatorSet out{
      {hu, Unit::bit},
      {hi, Unit::bit},
      {hg, Unit::bit},
      {hui, Unit::bit},
      {hug, Unit::bit},
      {hig, Unit::bit},
      {huig, Unit::bit},
      {hu + hi - hui, Unit::bit},
      {hu + hg - hug, Unit::bit},
      {hi + hg - hig, Unit::bit},
      {detail::combine_t_uig_bits(hu, hi, hg, hui, hug, hig, huig), Unit::bit}};
  return unit == Unit::bit ? out : out.in_unit(unit);
}

/// Builds the indicator row from disjoint cells under the given universe
/// policy.
inline IndicatorSet indicator_set(
    const ExclusiveCells& cells,
    const UniversePolicy& policy = UniversePolicy::union_only(),
    Unit unit = Unit::bit) {
  return indicator_set(entropy_profile(cells_to_joint3(cells, policy)), unit);
}

}  // namespace trihelix
