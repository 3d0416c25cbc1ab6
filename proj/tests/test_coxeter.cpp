#include <doctest.h>

#include <array>
#include <cmath>

#include "curvlink/coxeter.hpp"

using namespace curvlink;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("generators are involutions preserving the form") {
  for (int m = 2; m <= 9; ++m) {
    for (auto p : {std::optional<int>(2), std::optional<int>(5), std::optional<int>()}) {
      const ReflectionRep rep(CoxeterMatrix::triangle(m, 3, p));
      const auto id = Eigen::MatrixXd::Identity(3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& s = rep.generator(i);
        CHECK(max_abs(s * s - id) < 1e-10);
        CHECK(max_abs(s.transpose() * rep.form() * s - rep.form()) < 1e-10);
      }
    }
  }
}

TEST_CASE("pair products have the prescribed orders") {
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      const CoxeterMatrix c = CoxeterMatrix::triangle(m, n, 2);
      const ReflectionRep rep(c);
      const auto id = Eigen::MatrixXd::Identity(3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          const int k = *c.at(i, j);
          Eigen::MatrixXd p = id;
          const Eigen::MatrixXd pair = word_matrix(rep, {i, j});
          for (int t = 0; t < k; ++t) p = p * pair;
          CHECK(max_abs(p - id) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("word_matrix examples") {
  const ReflectionRep rep(CoxeterMatrix::triangle(3, 3, 2));
  const auto id = Eigen::MatrixXd::Identity(3, 3);
  CHECK(max_abs(word_matrix(rep, {}) - id) == 0.0);
  CHECK(max_abs(word_matrix(rep, parse_word("aa")) - id) < 1e-10);
  const auto ab = word_matrix(rep, parse_word("ab"));
  CHECK(max_abs(ab * ab * ab - id) < 1e-10);
  CHECK(max_abs(ab - id) > 0.1);
  CHECK(max_abs(ab * ab - id) > 0.1);
  CHECK_THROWS_AS(word_matrix(rep, {0, 3}), DomainError);
  CHECK_THROWS_AS(parse_word("aB"), DomainError);
}

TEST_CASE("element_order examples") {
  const auto w = parse_word("abc");
  const auto r222 = element_order(ReflectionRep(CoxeterMatrix::triangle(2, 2, 2)), w);
  CHECK(r222.kind == OrderKind::finite);
  CHECK(r222.order == 2);

  const auto r332 = element_order(ReflectionRep(CoxeterMatrix::triangle(3, 3, 2)), w);
  CHECK(r332.kind == OrderKind::finite);
  CHECK(r332.order == 4);

  const auto r333 = element_order(ReflectionRep(CoxeterMatrix::triangle(3, 3, 3)), w);
  CHECK(r333.infinite());

  const auto r732 = element_order(ReflectionRep(CoxeterMatrix::triangle(7, 3, 2)), w);
  CHECK(r732.kind == OrderKind::infinite_spectral);
  CHECK(r732.spectral_radius > 1.17);

  CHECK_THROWS_AS(element_order(ReflectionRep(CoxeterMatrix::triangle(3, 3, 2)), w, 0), DomainError);
}

TEST_CASE("small caps report undetermined rather than a false certificate") {
  // abc in W(5,3,2) has order 10.
  const ReflectionRep rep(CoxeterMatrix::triangle(5, 3, 2));
  const auto r = element_order(rep, parse_word("abc"), 5);
  CHECK(r.kind == OrderKind::undetermined);
  CHECK_FALSE(r.infinite());
  CHECK(element_order(rep, parse_word("abc"), 10).order == 10);
}

TEST_CASE("coxeter_abc_infinite examples") {
  CHECK_FALSE(coxeter_abc_infinite(3, 3, 2).infinite);
  CHECK(coxeter_abc_infinite(3, 3, 2).order.order == 4);
  const auto c532 = coxeter_abc_infinite(5, 3, 2);
  CHECK_FALSE(c532.infinite);
  CHECK(c532.order.kind == OrderKind::finite);
  CHECK(coxeter_abc_infinite(7, 3, 2).infinite);
  CHECK(coxeter_abc_infinite(6, 3, 2).infinite);
  CHECK(coxeter_abc_infinite(4, 4, 2).infinite);
  CHECK_THROWS_AS(coxeter_abc_infinite(1, 3, 2), DomainError);
}

TEST_CASE("finite orders are invariant under cyclic rotation of the word") {
  for (int m = 2; m <= 5; ++m) {
    const ReflectionRep rep(CoxeterMatrix::triangle(m, 3, 2));
    for (const char* word : {"abc", "abcb", "aabc"}) {
      const std::string s(word);
      const auto base = element_order(rep, parse_word(s));
      for (std::size_t k = 1; k < s.size(); ++k) {
        const auto rotated = element_order(rep, parse_word(s.substr(k) + s.substr(0, k)));
        CHECK(rotated.kind == base.kind);
        CHECK(rotated.order == base.order);
      }
    }
  }
}

TEST_CASE("(abc)^2 word constant") {
  const ReflectionRep rep(CoxeterMatrix::triangle(3, 3, 2));
  const auto abc = word_matrix(rep, parse_word("abc"));
  CHECK(max_abs(word_matrix(rep, kAbcSquared) - abc * abc) < 1e-12);
}

TEST_CASE("affine triangle groups get a parabolic certificate") {
  for (auto [m, n, p] : {std::array{3, 3, 3}, std::array{4, 4, 2}, std::array{6, 3, 2}}) {
    const auto c = coxeter_abc_infinite(m, n, p);
    CHECK(c.infinite);
    CHECK(c.order.kind == OrderKind::infinite_parabolic);
  }
}
