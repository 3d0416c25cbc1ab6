#pragma once

// Vertex-link geometry of the 3-dimensional building block for the dihedral
// Artin group A(m).
//
// The link of the base vertex is the orthogonal join of a 0-sphere {z+, z-}
// with two geodesic segments of length theta = (m-2)pi/m. The generator
// points a+, a-, b+, b- all sit at distance delta from the 0-sphere, which
// gives
//
//   alpha = d(a+, b+) = d(a-, b-) = 2 delta
//   beta  = d(a+, b-) = d(a-, b+),  cos beta = sin^2(delta) cos(theta) - cos^2(delta)
//
// and the three angles satisfy
//
//   2 cos(beta) + (1 + cos(theta)) cos(alpha) + (1 - cos(theta)) = 0.

#include <span>
#include <vector>

#include "curvlink/angle.hpp"

namespace curvlink {

/// theta = (m-2)pi/m. Throws DomainError for m < 2.
Angle theta_of(int m);

/// Distance d(a+, b-) in the link of X_m(delta). Requires 0 < delta < pi/2.
Angle beta_of(int m, Angle delta);

/// Unique alpha in (pi/2, pi) with alpha = beta, i.e.
/// cos(alpha) = (cos(theta) - 1) / (cos(theta) + 3). Requires m >= 3.
Angle symmetric_alpha(int m);

/// Left-hand side of the alpha/beta/theta relation; zero for consistent pairs.
double trigeqn_residual(int m, Angle alpha, Angle beta);

/// Link angles of one building block X_m(delta).
class DihedralBlock {
 public:
  /// m >= 2 and 0 < delta < pi/2.
  DihedralBlock(int m, Angle delta);

  /// Block whose alpha equals its beta. For m = 2 this is the flat torus with
  /// generator angle pi/2 (delta = pi/4).
  static DihedralBlock symmetric(int m);

  int m() const { return m_; }
  Angle delta() const { return delta_; }
  Angle theta() const { return theta_; }
  Angle alpha() const { return alpha_; }
  Angle beta() const { return beta_; }

 private:
  int m_;
  Angle delta_;
  Angle theta_;
  Angle alpha_;
  Angle beta_;
};

struct Table1Row {
  int m;
  double theta_deg;
  double cos_theta;
  double cos_alpha;
  double alpha_deg;
};

/// Symmetric-solution table for the given relator indices (each >= 3).
std::vector<Table1Row> table1(std::span<const int> m_values);

}  // namespace curvlink
