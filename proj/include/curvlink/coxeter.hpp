#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "curvlink/angle.hpp"

namespace curvlink {

/// Symmetric Coxeter matrix: m_ii = 1, off-diagonal entries >= 2 or infinite
/// (std::nullopt).
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(std::size_t rank);

  /// W(m,n,p) on a, b, c with m = m_ab, n = m_bc, p = m_ac.
  static CoxeterMatrix triangle(std::optional<int> m, std::optional<int> n, std::optional<int> p);

  void set(std::size_t i, std::size_t j, std::optional<int> m);
  std::optional<int> at(std::size_t i, std::size_t j) const;
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
  std::vector<std::optional<int>> entries_;
};

/// Geometric (Tits) representation: B(e_i, e_j) = -cos(pi / m_ij), with -1 for
/// infinite m_ij, and generator i acting by v -> v - 2 B(e_i, v) e_i.
class ReflectionRep {
 public:
  explicit ReflectionRep(const CoxeterMatrix& m);

  std::size_t rank() const { return form_.rows(); }
  const Eigen::MatrixXd& form() const { return form_; }
  const Eigen::MatrixXd& generator(std::size_t i) const { return generators_.at(i); }

 private:
  Eigen::MatrixXd form_;
  std::vector<Eigen::MatrixXd> generators_;
};

/// Generator indices; parse_word maps 'a' -> 0, 'b' -> 1, ...
using Word = std::vector<std::size_t>;
Word parse_word(const std::string& letters);

/// The element (abc)^2, image in W of a^-1 b^-1 c^-1 a b c.
inline const Word kAbcSquared{0, 1, 2, 0, 1, 2};

/// Ordered product of generator matrices. Throws DomainError for bad indices.
Eigen::MatrixXd word_matrix(const ReflectionRep& rep, const Word& word);

enum class OrderKind { finite, infinite_spectral, infinite_parabolic, undetermined };

std::string to_string(OrderKind k);

struct OrderResult {
  OrderKind kind = OrderKind::undetermined;
  std::optional<long> order;  // set when finite
  double spectral_radius = 0.0;
  double norm_growth = 0.0;  // ||M^2K|| / ||M^K|| for the parabolic test

  bool infinite() const {
    return kind == OrderKind::infinite_spectral || kind == OrderKind::infinite_parabolic;
  }
};

/// Smallest k <= cap with M^k = I (entrywise within 1e-8). Otherwise
/// certifies infinite order by a spectral radius above 1 + 1e-4, or by
/// linear growth of ||M^k|| over 1000 powers when the spectrum is on the
/// unit circle; anything else is reported as undetermined.
OrderResult element_order(const ReflectionRep& rep, const Word& word, long cap = 10000);

struct AbcOrderCertificate {
  bool infinite = false;
  bool predicate = false;  // 1/m + 1/n + 1/p <= 1
  OrderResult order;
};

/// Order of the Coxeter element abc of W(m,n,p). Throws DomainError when an
/// index is below 2; inconclusive evidence shows up as OrderKind::undetermined
/// with `infinite` false.
AbcOrderCertificate coxeter_abc_infinite(int m, int n, int p, long cap = 10000);

}  // namespace curvlink
