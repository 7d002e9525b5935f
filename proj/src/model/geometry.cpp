#include "snd/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "snd/errors.hpp"

namespace snd {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Point& p, const Scalar& k) { return {p.x * k, p.y * k}; }

Scalar squared_distance(const Point& a, const Point& b) {
  const Scalar dx = a.x - b.x;
  const Scalar dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Angle Angle::direction(const Scalar& pi_units) {
  // reduce modulo 2
  mpq_class q = pi_units.raw() / 2;
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Angle(pi_units - Scalar(mpq_class(whole * 2)));
}

Angle Angle::width(const Scalar& pi_units) {
  if (pi_units <= Scalar(0) || pi_units > Scalar(2)) {
    throw InvalidArgument("sector width " + pi_units.str() + "pi outside (0, 2pi]");
  }
  return Angle(pi_units);
}

bool Angle::octant_aligned() const { return (pi_units_ * Scalar(4)).is_integer(); }

namespace {

// 0 for polar angle in [0, pi), 1 for [pi, 2pi).
int half_of(const Point& v) {
  if (v.y.sign() > 0 || (v.y.sign() == 0 && v.x.sign() > 0)) return 0;
  return 1;
}

Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Exact comparison of polar angles of two nonzero vectors.
int compare_polar_vectors(const Point& a, const Point& b) {
  const int ha = half_of(a);
  const int hb = half_of(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  const int c = cross(a, b).sign();
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

Point octant_ray(int k) {
  static const std::array<std::array<int, 2>, 8> rays{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
  const auto& r = rays[static_cast<std::size_t>(k % 8)];
  return {Scalar(r[0]), Scalar(r[1])};
}

// Compares the polar angle of v (in [0, 2pi)) against theta (pi units, in [0, 2]).
int compare_polar(const Point& v, const Scalar& theta) {
  if (theta == Scalar(2)) return -1;
  const Scalar quarters = theta * Scalar(4);
  if (quarters.is_integer()) {
    const int k = static_cast<int>(quarters.raw().get_num().get_si());
    return compare_polar_vectors(v, octant_ray(k));
  }
  long double phi = std::atan2(static_cast<long double>(v.y.to_double()), static_cast<long double>(v.x.to_double()));
  if (phi < 0) phi += 2 * std::numbers::pi_v<long double>;
  const long double t = static_cast<long double>(theta.to_double()) * std::numbers::pi_v<long double>;
  return phi < t ? -1 : (phi > t ? 1 : 0);
}

}  // namespace

bool in_sector(const Point& apex, const Angle& direction, const Angle& width, const Point& target) {
  if (apex == target || width.is_full_turn()) return true;
  const Point v = target - apex;
  const Scalar& start = direction.pi_units();
  const Scalar end = start + width.pi_units();
  if (end <= Scalar(2)) {
    return compare_polar(v, start) >= 0 && compare_polar(v, end) <= 0;
  }
  return compare_polar(v, start) >= 0 || compare_polar(v, end - Scalar(2)) <= 0;
}

}  // namespace snd

namespace snd {

int compare_travel_time(const Point& a, const Point& b, const Scalar& v, const Scalar& q) {
  if (q.sign() < 0) return 1;
  const Scalar reach = v * q;
  return (squared_distance(a, b) - reach * reach).sign();
}

}  // namespace snd
