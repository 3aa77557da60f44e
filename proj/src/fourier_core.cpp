#include "cqg/fourier_core.hpp"

#include "cqg/l2_operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cqg {

namespace {

MatrixC q_diag_matrix(const IrrepData& irrep) {
  MatrixC q = MatrixC::Zero(irrep.n(), irrep.n());
  for (int i = 0; i < irrep.n(); ++i) q(i, i) = irrep.q(i);
  return q;
}

}  // namespace

void FourierCoeffs::set(std::size_t index, MatrixC m) {
  const auto& irrep = dual_->irrep(index);
  if (m.rows() != irrep.n() || m.cols() != irrep.n()) {
    throw std::invalid_argument("coefficient for irrep '" + irrep.label() + "' must be " +
                                std::to_string(irrep.n()) + "x" + std::to_string(irrep.n()));
  }
  entries_[index] = std::move(m);
}

MatrixC FourierCoeffs::at(std::size_t index) const {
  auto it = entries_.find(index);
  if (it != entries_.end()) return it->second;
  const int n = dual_->irrep(index).n();
  return MatrixC::Zero(n, n);
}

FourierCoeffs FourierCoeffs::scaled(cd c) const {
  FourierCoeffs out(dual_);
  for (const auto& [idx, m] : entries_) out.entries_[idx] = c * m;
  return out;
}

FourierCoeffs FourierCoeffs::operator+(const FourierCoeffs& other) const {
  require_same_dual(*this, other);
  FourierCoeffs out = *this;
  for (const auto& [idx, m] : other.entries_) {
    auto it = out.entries_.find(idx);
    if (it == out.entries_.end()) {
      out.entries_[idx] = m;
    } else {
      it->second += m;
    }
  }
  return out;
}

FourierCoeffs FourierCoeffs::operator-(const FourierCoeffs& other) const {
  return *this + other.scaled(-1.0);
}

void require_same_dual(const FourierCoeffs& a, const FourierCoeffs& b) {
  if (!same_dual(a.dual(), b.dual())) {
    throw std::invalid_argument("coefficient families live on different duals ('" +
                                a.dual()->name() + "' vs '" + b.dual()->name() + "')");
  }
}

double ell_infty_norm(const FourierCoeffs& x) {
  double sup = 0.0;
  for (const auto& [idx, m] : x.support()) sup = std::max(sup, spectral_norm(m));
  return sup;
}

double ell2_norm(const FourierCoeffs& x) {
  double total = 0.0;
  for (const auto& [idx, m] : x.support()) {
    const auto& irrep = x.dual()->irrep(idx);
    // tr(Q X^* X) = sum_j q_j ||column j||^2
    double tr = 0.0;
    for (int j = 0; j < irrep.n(); ++j) tr += irrep.q(j) * m.col(j).squaredNorm();
    total += irrep.d() * tr;
  }
  return std::sqrt(total);
}

double ell1_norm(const FourierCoeffs& x) {
  double total = 0.0;
  for (const auto& [idx, m] : x.support()) {
    const auto& irrep = x.dual()->irrep(idx);
    total += irrep.d() * trace_norm(m * q_diag_matrix(irrep));
  }
  return total;
}

cd pairing(const FourierCoeffs& mu, const FourierCoeffs& f) {
  require_same_dual(mu, f);
  cd total = 0.0;
  for (const auto& [idx, m] : mu.support()) {
    auto it = f.support().find(idx);
    if (it == f.support().end()) continue;
    const auto& irrep = mu.dual()->irrep(idx);
    total += irrep.d() * (m * q_diag_matrix(irrep) * it->second.adjoint()).trace();
  }
  return total;
}

FourierCoeffs convolve(const FourierCoeffs& f1, const FourierCoeffs& f2) {
  require_same_dual(f1, f2);
  FourierCoeffs out(f1.dual());
  for (const auto& [idx, m1] : f1.support()) {
    auto it = f2.support().find(idx);
    if (it == f2.support().end()) continue;
    out.set(idx, it->second * m1);
  }
  return out;
}

FourierCoeffs convolution_unit(const DualPtr& dual) {
  FourierCoeffs out(dual);
  for (std::size_t idx = 0; idx < dual->size(); ++idx) {
    const int n = dual->irrep(idx).n();
    out.set(idx, MatrixC::Identity(n, n));
  }
  return out;
}

double plancherel_gram_norm(const FourierCoeffs& f) {
  // Different irreps are Haar-orthogonal, so only same-block pairs contribute.
  cd total = 0.0;
  for (const auto& [idx, fhat] : f.support()) {
    const auto& irrep = f.dual()->irrep(idx);
    const int n = irrep.n();
    const double d = irrep.d();
    // f = sum_{a,b} c(a,b) u_{a,b} with c(a,b) = d (f^ Q)_{b,a}.
    MatrixC c(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) c(a, b) = d * fhat(b, a) * irrep.q(a);
    }
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            total += std::conj(c(s, t)) * c(a, b) * schur_inner(irrep, {a, b}, {s, t});
          }
        }
      }
    }
  }
  return std::sqrt(std::max(0.0, total.real()));
}

FourierCoeffs matrix_coefficient(const DualPtr& dual, std::size_t index, int a, int b) {
  const auto& irrep = dual->irrep(index);
  if (a < 0 || b < 0 || a >= irrep.n() || b >= irrep.n()) {
    throw std::out_of_range("matrix coefficient index out of range");
  }
  MatrixC m = MatrixC::Zero(irrep.n(), irrep.n());
  m(b, a) = 1.0 / (irrep.d() * irrep.q(a));
  FourierCoeffs out(dual);
  out.set(index, std::move(m));
  return out;
}

}  // namespace cqg
