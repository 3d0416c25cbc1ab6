#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace curvlink {

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default tolerance for link-condition verdicts (radians).
inline constexpr double kDefaultTol = 1e-9;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// An angle or a link distance, stored in radians.
class Angle {
 public:
  constexpr Angle() = default;

  static constexpr Angle radians(double r) { return Angle(r); }
  static constexpr Angle degrees(double d) { return Angle(deg_to_rad(d)); }

  constexpr double rad() const { return rad_; }
  constexpr double deg() const { return rad_to_deg(rad_); }

  friend constexpr Angle operator+(Angle a, Angle b) { return Angle(a.rad_ + b.rad_); }
  friend constexpr Angle operator-(Angle a, Angle b) { return Angle(a.rad_ - b.rad_); }
  friend constexpr Angle operator*(double k, Angle a) { return Angle(k * a.rad_); }
  friend constexpr Angle operator/(Angle a, double k) { return Angle(a.rad_ / k); }
  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  constexpr explicit Angle(double r) : rad_(r) {}
  double rad_ = 0.0;
};

}  // namespace curvlink
