#pragma once

#include <compare>
#include <string>

#include "snd/scalar.hpp"

namespace snd {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Point& p, const Scalar& k);

Scalar squared_distance(const Point& a, const Point& b);

/// An angle stored as an exact rational multiple of pi.
class Angle {
 public:
  Angle() = default;

  /// Direction normalized into [0, 2pi).
  static Angle direction(const Scalar& pi_units);
  /// Sector width; must lie in (0, 2pi].
  static Angle width(const Scalar& pi_units);

  const Scalar& pi_units() const { return pi_units_; }
  bool is_full_turn() const { return pi_units_ == Scalar(2); }
  /// True when the angle is a multiple of pi/4, i.e. its ray has a rational direction vector.
  bool octant_aligned() const;
  std::string str() const { return pi_units_.str() + "pi"; }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(const Angle&, const Angle&) = default;

 private:
  explicit Angle(Scalar pi_units) : pi_units_(std::move(pi_units)) {}
  Scalar pi_units_;
};

/// True iff `target` lies in the closed sector of `width` starting at `direction`
/// (counter-clockwise) with apex `apex`. The apex itself counts as inside, and a
/// full-turn width covers the whole plane.
bool in_sector(const Point& apex, const Angle& direction, const Angle& width, const Point& target);

}  // namespace snd

namespace snd {

/// Sign of dist(a, b)/v - q, computed without square roots.
int compare_travel_time(const Point& a, const Point& b, const Scalar& v, const Scalar& q);

}  // namespace snd
