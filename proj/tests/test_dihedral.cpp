#include <doctest.h>

#include <cmath>
#include <vector>

#include "curvlink/dihedral.hpp"
#include "oracles.hpp"

using namespace curvlink;

namespace {

struct ReferenceRow {
  int m;
  double theta_deg;
  double cos_theta;
  double cos_alpha;
  double alpha_deg;
};

// Reference table of symmetric values (degrees, rounded).
const std::vector<ReferenceRow> kTable1{
    {3, 60, 0.5, -1.0 / 7.0, 98.213},       {4, 90, 0, -1.0 / 3.0, 109.471},
    {5, 108, -0.309, -0.486, 119.107},      {6, 120, -0.5, -0.6, 126.870},
    {7, 128.571, -0.623, -0.683, 133.090},  {8, 135, -0.70710678, -0.745, 138.118},
    {9, 140, -0.766, -0.791, 142.237},      {10, 144, -0.809, -0.826, 145.656},
    {11, 147.273, -0.841, -0.853, 148.531}, {12, 150, -0.866, -0.874, 150.978},
    {13, 152.307, -0.885, -0.892, 153.083}, {18, 160, -0.940, -0.941, 160.298},
    {19, 161.053, -0.946, -0.947, 161.306}, {21, 162.857, -0.9556, -0.9565, 163.046},
    {22, 163.64, -0.9595, -0.9603, 163.801}, {43, 171.628, -0.9893, -0.9894, 171.650},
    {44, 171.818, -0.9898, -0.9899, 171.839},
};

}  // namespace

TEST_CASE("theta_of") {
  CHECK(theta_of(3).deg() == doctest::Approx(60.0).epsilon(1e-12));
  CHECK(theta_of(2).rad() == 0.0);
  CHECK(std::abs(theta_of(43).deg() - 171.628) < 0.005);
  CHECK_THROWS_AS(theta_of(1), DomainError);
  CHECK_THROWS_AS(theta_of(-4), DomainError);
}

TEST_CASE("beta_of examples") {
  CHECK(std::abs(beta_of(4, Angle::degrees(81.5)).deg() - 91.252) < 0.01);
  CHECK(std::abs(beta_of(6, Angle::degrees(63.435)).deg() - 126.870) < 0.005);
  for (int m : {2, 3, 7, 40}) {
    CHECK(std::abs(beta_of(m, Angle::degrees(89.9999)).deg() - theta_of(m).deg()) < 0.01);
  }
  CHECK_THROWS_AS(beta_of(4, Angle::degrees(0.0)), DomainError);
  CHECK_THROWS_AS(beta_of(4, Angle::degrees(90.0)), DomainError);
  CHECK_THROWS_AS(beta_of(4, Angle::degrees(-3.0)), DomainError);
}

TEST_CASE("beta_of agrees with explicit unit vectors") {
  for (int m = 2; m <= 30; ++m) {
    for (double d = 1.0; d < 90.0; d += 7.3) {
      const double expect = std::acos(testing::sphere_model_cos_beta(theta_of(m).rad(), deg_to_rad(d)));
      CHECK(beta_of(m, Angle::degrees(d)).rad() == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("symmetric_alpha examples") {
  CHECK(std::cos(symmetric_alpha(4).rad()) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(symmetric_alpha(4).deg() - 109.471) < 0.005);
  CHECK(std::abs(symmetric_alpha(22).deg() - 163.801) < 0.005);
  CHECK(std::abs(symmetric_alpha(44).deg() - 171.839) < 0.005);
  CHECK_THROWS_AS(symmetric_alpha(2), DomainError);
}

TEST_CASE("symmetric_alpha is a fixed point of beta_of") {
  for (int m = 3; m <= 200; ++m) {
    const Angle a = symmetric_alpha(m);
    CHECK(beta_of(m, a / 2.0).rad() == doctest::Approx(a.rad()).epsilon(1e-12));
    CHECK(a.rad() > kPi / 2.0);
    CHECK(a.rad() < kPi);
  }
}

TEST_CASE("trigeqn_residual examples") {
  const Angle a6 = Angle::degrees(126.870);
  CHECK(std::abs(trigeqn_residual(6, a6, a6)) < 1e-4);
  const Angle a3 = Angle::degrees(98.213);
  CHECK(std::abs(trigeqn_residual(3, a3, a3)) < 1e-4);
  const double r = trigeqn_residual(5, Angle::degrees(90), Angle::degrees(90));
  CHECK(r == doctest::Approx(1.0 - std::cos(deg_to_rad(108.0))).epsilon(1e-12));
  CHECK(r == doctest::Approx(1.309).epsilon(1e-3));
}

TEST_CASE("block angle properties over a grid") {
  for (int m = 3; m <= 60; ++m) {
    for (double d = 0.01; d < 89.99; d += 0.37) {
      const DihedralBlock b(m, Angle::degrees(d));
      CHECK(std::abs(trigeqn_residual(m, b.alpha(), b.beta())) < 1e-10);
      CHECK(b.beta() > b.theta());
      CHECK(b.alpha().rad() + b.beta().rad() - kPi > 0.0);
      CHECK(b.alpha().rad() == doctest::Approx(2.0 * deg_to_rad(d)));
    }
  }
}

TEST_CASE("symmetric_alpha increases with m") {
  double prev = 0.0;
  for (int m = 3; m <= 500; ++m) {
    const double a = symmetric_alpha(m).rad();
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("table1 reproduces the reference rows") {
  std::vector<int> ms;
  for (const auto& r : kTable1) ms.push_back(r.m);
  const auto rows = table1(ms);
  REQUIRE(rows.size() == kTable1.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].m);
    CHECK(std::abs(rows[i].theta_deg - kTable1[i].theta_deg) < 0.005);
    CHECK(std::abs(rows[i].cos_theta - kTable1[i].cos_theta) < 0.001);
    CHECK(std::abs(rows[i].cos_alpha - kTable1[i].cos_alpha) < 0.001);
    CHECK(std::abs(rows[i].alpha_deg - kTable1[i].alpha_deg) < 0.005);
  }
  const std::vector<int> bad{3, 2};
  CHECK_THROWS_AS(table1(bad), DomainError);
}

TEST_CASE("m = 2 block is the square torus") {
  const auto b = DihedralBlock::symmetric(2);
  CHECK(b.alpha().deg() == doctest::Approx(90.0));
  CHECK(b.beta().deg() == doctest::Approx(90.0));
}
