#include "curvlink/coxeter.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace curvlink {

CoxeterMatrix::CoxeterMatrix(std::size_t rank) : rank_(rank), entries_(rank * rank, std::nullopt) {
  for (std::size_t i = 0; i < rank; ++i) entries_[i * rank + i] = 1;
}

CoxeterMatrix CoxeterMatrix::triangle(std::optional<int> m, std::optional<int> n,
                                      std::optional<int> p) {
  CoxeterMatrix c(3);
  c.set(0, 1, m);
  c.set(1, 2, n);
  c.set(0, 2, p);
  return c;
}

void CoxeterMatrix::set(std::size_t i, std::size_t j, std::optional<int> m) {
  if (i >= rank_ || j >= rank_) throw DomainError("Coxeter matrix index out of range");
  if (i == j) throw DomainError("diagonal Coxeter entries are fixed to 1");
  if (m && *m < 2) throw DomainError("off-diagonal Coxeter entries must be >= 2 or infinite");
  entries_[i * rank_ + j] = m;
  entries_[j * rank_ + i] = m;
}

std::optional<int> CoxeterMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rank_ || j >= rank_) throw DomainError("Coxeter matrix index out of range");
  return entries_[i * rank_ + j];
}

ReflectionRep::ReflectionRep(const CoxeterMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rank());
  form_ = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto mij = m.at(i, j);
      form_(i, j) = mij ? -std::cos(kPi / *mij) : -1.0;
    }
  }
  // s_i(v) = v - 2 B(e_i, v) e_i: only row i differs from the identity.
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    s.row(i) -= 2.0 * form_.row(i);
    generators_.push_back(std::move(s));
  }
}

Word parse_word(const std::string& letters) {
  Word w;
  for (char ch : letters) {
    if (ch < 'a' || ch > 'z') throw DomainError(std::string("bad generator letter '") + ch + "'");
    w.push_back(static_cast<std::size_t>(ch - 'a'));
  }
  return w;
}

Eigen::MatrixXd word_matrix(const ReflectionRep& rep, const Word& word) {
  const auto n = static_cast<Eigen::Index>(rep.rank());
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t g : word) {
    if (g >= rep.rank()) throw DomainError("generator index " + std::to_string(g) + " out of range");
    out = out * rep.generator(g);
  }
  return out;
}

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::finite: return "finite";
    case OrderKind::infinite_spectral: return "infinite_spectral";
    case OrderKind::infinite_parabolic: return "infinite_parabolic";
    case OrderKind::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

constexpr double kIdentityTol = 1e-8;
// A defective eigenvalue 1 (affine cases) is computed with error near
// eps^(1/k) for a k-block, up to about 1e-5 here.
constexpr double kSpectralMargin = 1e-4;
constexpr long kGrowthPowers = 1000;

double spectral_radius(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

OrderResult element_order(const ReflectionRep& rep, const Word& word, long cap) {
  if (cap < 1) throw DomainError("order cap must be >= 1");
  const Eigen::MatrixXd m = word_matrix(rep, word);
  const auto n = m.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  OrderResult out;
  out.spectral_radius = spectral_radius(m);
  if (out.spectral_radius > 1.0 + kSpectralMargin) {
    out.kind = OrderKind::infinite_spectral;
    return out;
  }

  const long half = std::min(kGrowthPowers, cap / 2);
  double norm_half = 0.0;
  double norm_full = 0.0;
  double norm_early = 0.0;
  Eigen::MatrixXd power = id;
  for (long k = 1; k <= cap; ++k) {
    power = power * m;
    if ((power - id).cwiseAbs().maxCoeff() <= kIdentityTol) {
      out.kind = OrderKind::finite;
      out.order = k;
      return out;
    }
    const double norm = power.norm();
    if (k <= 10) norm_early = std::max(norm_early, norm);
    if (k == half) norm_half = norm;
    if (k == 2 * half) {
      norm_full = norm;
      break;
    }
  }
  if (half >= 10 && norm_half > 0.0) {
    out.norm_growth = norm_full / norm_half;
    // A unipotent part makes ||M^k|| grow linearly: doubling k doubles the norm.
    if (out.norm_growth >= 1.5 && norm_half >= 10.0 * norm_early) {
      out.kind = OrderKind::infinite_parabolic;
      return out;
    }
  }
  out.kind = OrderKind::undetermined;
  return out;
}

AbcOrderCertificate coxeter_abc_infinite(int m, int n, int p, long cap) {
  if (m < 2 || n < 2 || p < 2) throw DomainError("Coxeter indices must be >= 2");
  AbcOrderCertificate cert;
  const long long a = m, b = n, c = p;
  cert.predicate = b * c + a * c + a * b <= a * b * c;
  const ReflectionRep rep(CoxeterMatrix::triangle(m, n, p));
  cert.order = element_order(rep, parse_word("abc"), cap);
  cert.infinite = cert.order.infinite();
  return cert;
}

}  // namespace curvlink
