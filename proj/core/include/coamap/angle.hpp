#ifndef COAMAP_ANGLE_HPP
#define COAMAP_ANGLE_HPP

#include <cassert>
#include <cmath>
#include <numbers>
#include <vector>

#include "coamap/numeric.hpp"

namespace coamap {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce q (in units of pi) into the principal window (-1, 1].
inline Rat normalize_pi_units(const Rat& q) {
  // k = ceil((q-1)/2), q' = q - 2k lands in (-1, 1].
  Rat shifted = (q - 1) / 2;
  Int k = rat_ceil(shifted);
  return q - Rat(2) * Rat(k);
}

inline double normalize_radians(double x) {
  double r = std::remainder(x, kTwoPi);  // in [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

// An angle (or more generally a real number used as a phase).  Exact
// angles are stored as a rational number of pi units so that the
// closed/open boundary distinctions can be decided without tolerance;
// everything else is a double in radians.  Mixing an exact angle with a
// float one demotes the result to float.
//
// Values are not normalized automatically: sums of phases are used as
// lifts in R, and normalization to the principal branch (-pi, pi] is an
// explicit step.
class Angle {
 public:
  Angle() : exact_(true), q_(0), rad_(0.0) {}

  static Angle pi_units(const Rat& q) {
    Angle a;
    a.exact_ = true;
    a.q_ = q;
    return a;
  }
  static Angle pi_units(long num, long den) { return pi_units(make_rat(Int(num), Int(den))); }
  static Angle radians(double x) {
    Angle a;
    a.exact_ = false;
    a.rad_ = x;
    return a;
  }
  static Angle zero() { return Angle(); }
  static Angle pi() { return pi_units(1, 1); }

  bool exact() const { return exact_; }
  const Rat& pi_value() const {
    assert(exact_);
    return q_;
  }
  double rad() const { return exact_ ? to_double(q_) * kPi : rad_; }

  Angle normalized() const {
    return exact_ ? pi_units(normalize_pi_units(q_)) : radians(normalize_radians(rad_));
  }
  bool is_normalized() const {
    if (exact_) return q_ > -1 && q_ <= 1;
    return rad_ > -kPi && rad_ <= kPi;
  }
  bool is_zero() const { return exact_ ? q_ == 0 : rad_ == 0.0; }

  friend Angle operator+(const Angle& a, const Angle& b) {
    if (a.exact_ && b.exact_) return pi_units(a.q_ + b.q_);
    return radians(a.rad() + b.rad());
  }
  friend Angle operator-(const Angle& a, const Angle& b) {
    if (a.exact_ && b.exact_) return pi_units(a.q_ - b.q_);
    return radians(a.rad() - b.rad());
  }
  Angle operator-() const { return exact_ ? pi_units(-q_) : radians(-rad_); }
  Angle scaled(const Int& k) const {
    return exact_ ? pi_units(Rat(k) * q_) : radians(to_double(k) * rad_);
  }
  Angle scaled(const Rat& k) const {
    return exact_ ? pi_units(k * q_) : radians(to_double(k) * rad_);
  }

  // Value comparison of two lifts of matching exactness.
  friend bool operator<(const Angle& a, const Angle& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_;
    return a.rad() < b.rad();
  }
  friend bool operator==(const Angle& a, const Angle& b) {
    if (a.exact_ && b.exact_) return a.q_ == b.q_;
    if (a.exact_ != b.exact_) return false;
    return a.rad_ == b.rad_;
  }

 private:
  bool exact_;
  Rat q_;      // value = q_ * pi when exact_
  double rad_; // value in radians otherwise
};

// Whether two normalized angles name the same point on the circle,
// with tolerance `eps` (radians) used in float mode only.
inline bool same_circle_point(const Angle& a, const Angle& b, double eps) {
  if (a.exact() && b.exact()) return normalize_pi_units(a.pi_value() - b.pi_value()) == 0;
  double d = normalize_radians(a.rad() - b.rad());
  return std::abs(d) <= eps || std::abs(std::abs(d) - kTwoPi) <= eps;
}

// A point of the real torus T^n; coordinates normalized to (-pi, pi].
struct TorusPoint {
  std::vector<Angle> coords;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<Angle> c) : coords(std::move(c)) {
    for (auto& a : coords) a = a.normalized();
  }

  int dim() const { return static_cast<int>(coords.size()); }
  bool exact() const {
    for (const auto& a : coords)
      if (!a.exact()) return false;
    return true;
  }

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
      if (a.coords[i] < b.coords[i]) return true;
      if (b.coords[i] < a.coords[i]) return false;
    }
    return a.coords.size() < b.coords.size();
  }
};

// <alpha, theta> accumulated as a lift (no normalization).
inline Angle dot(const std::vector<Int>& alpha, const std::vector<Angle>& theta) {
  assert(alpha.size() == theta.size());
  bool exact = true;
  for (const auto& a : theta) exact &= a.exact();
  if (exact) {
    Rat acc(0);
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += Rat(alpha[i]) * theta[i].pi_value();
    return Angle::pi_units(acc);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) acc += to_double(alpha[i]) * theta[i].rad();
  return Angle::radians(acc);
}

}  // namespace coamap

#endif
