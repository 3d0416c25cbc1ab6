#include "curvlink/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvlink {

namespace {

void require_delta(Angle delta) {
  if (!(delta.rad() > 0.0 && delta.rad() < kPi / 2.0)) {
    throw DomainError("delta must lie in (0, 90) degrees, got " + std::to_string(delta.deg()));
  }
}

}  // namespace

Angle theta_of(int m) {
  if (m < 2) throw DomainError("relator index must be >= 2, got " + std::to_string(m));
  return Angle::radians(static_cast<double>(m - 2) * kPi / static_cast<double>(m));
}

Angle beta_of(int m, Angle delta) {
  const Angle theta = theta_of(m);
  require_delta(delta);
  const double s = std::sin(delta.rad());
  const double c = std::cos(delta.rad());
  const double cos_beta = std::clamp(s * s * std::cos(theta.rad()) - c * c, -1.0, 1.0);
  return Angle::radians(std::acos(cos_beta));
}

Angle symmetric_alpha(int m) {
  if (m < 3) throw DomainError("symmetric solution needs m >= 3, got " + std::to_string(m));
  const double ct = std::cos(theta_of(m).rad());
  return Angle::radians(std::acos((ct - 1.0) / (ct + 3.0)));
}

double trigeqn_residual(int m, Angle alpha, Angle beta) {
  const double ct = std::cos(theta_of(m).rad());
  return 2.0 * std::cos(beta.rad()) + (1.0 + ct) * std::cos(alpha.rad()) + (1.0 - ct);
}

DihedralBlock::DihedralBlock(int m, Angle delta)
    : m_(m), delta_(delta), theta_(theta_of(m)), alpha_(2.0 * delta), beta_(beta_of(m, delta)) {}

DihedralBlock DihedralBlock::symmetric(int m) {
  if (m == 2) return DihedralBlock(2, Angle::radians(kPi / 4.0));
  return DihedralBlock(m, symmetric_alpha(m) / 2.0);
}

std::vector<Table1Row> table1(std::span<const int> m_values) {
  std::vector<Table1Row> rows;
  rows.reserve(m_values.size());
  for (int m : m_values) {
    const Angle theta = theta_of(m);
    const Angle alpha = symmetric_alpha(m);
    rows.push_back({m, theta.deg(), std::cos(theta.rad()), std::cos(alpha.rad()), alpha.deg()});
  }
  return rows;
}

}  // namespace curvlink
