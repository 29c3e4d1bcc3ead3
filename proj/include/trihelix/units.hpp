#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trihelix/detail.hpp"

namespace trihelix {

// All internal arithmetic runs in bits (base-2 logarithms); mbit and nat are
// exact scalings applied at the edges.
enum class Unit { bit, mbit, nat };

// Units per bit.
constexpr double unit_scale(Unit u) {
  switch (u) {
    case Unit::bit:
      return 1.0;
    case Unit::mbit:
      return 1000.0;
    case Unit::nat:
      return 0.6931471805599453;  // ln 2
  }
  return 1.0;
}

constexpr std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::bit:
      return "bit";
    case Unit::mbit:
      return "mbit";
    case Unit::nat:
      return "nat";
  }
  return "bit";
}

inline std::optional<Unit> parse_unit(std::string_view s) {
  s = detail::trim(s);
  if (detail::iequals(s, "bit")) return Unit::bit;
  if (detail::iequals(s, "mbit")) return Unit::mbit;
  if (detail::iequals(s, "nat")) return Unit::nat;
  return std::nullopt;
}

/// A scalar information quantity tagged with its unit.
struct EntropyValue {
  double value = 0.0;
  Unit unit = Unit::bit;

  double in(Unit target) const {
    if (target == unit) return value;
    return value / unit_scale(unit) * unit_scale(target);
  }

  friend bool operator==(const EntropyValue&, const EntropyValue&) = default;
};

inline EntropyValue convert_unit(const EntropyValue& v, Unit target) {
  return EntropyValue{v.in(target), target};
}

}  // namespace trihelix
