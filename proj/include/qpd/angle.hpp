#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

namespace qpd {

inline constexpr double kPi = std::numbers::pi;

/// An angle held either as an exact rational multiple of pi ("pi/3",
/// "-3pi/4", "0") or as a plain radian value ("0.25"). The symbolic form keeps
/// the special points of the game (0, pi/2, pi) exact through parsing and
/// printing.
class Angle {
 public:
  Angle() = default;

  static Angle pi_fraction(std::int64_t num, std::int64_t den = 1);
  static Angle from_radians(double value);

  // Accepts: [+-][k][*]pi[/d], integers, decimals. Throws std::invalid_argument.
  static Angle parse(std::string_view text);

  double radians() const;
  bool symbolic() const { return symbolic_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  // Canonical text: "0", "pi", "-pi/2", "3pi/4", or a shortest-round-trip decimal.
  std::string str() const;

  friend bool operator==(const Angle& a, const Angle& b);

 private:
  bool symbolic_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

// "t,a,b" -> three angles.
std::array<Angle, 3> parse_angle_triple(std::string_view text);
// "x,y" -> two angles.
std::array<Angle, 2> parse_angle_pair(std::string_view text);

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace qpd
