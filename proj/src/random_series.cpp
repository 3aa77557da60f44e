#include "cqg/random_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqg {

void MatrixFamily::set(std::size_t index, MatrixC m) {
  const auto& irrep = dual_->irrep(index);
  if (m.rows() != irrep.n() || m.cols() != irrep.n()) {
    throw std::invalid_argument("family entry for irrep '" + irrep.label() + "' has wrong shape");
  }
  entries_[index] = std::move(m);
}

const MatrixC& MatrixFamily::at(std::size_t index) const {
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    throw std::out_of_range("family has no entry for irrep '" + dual_->irrep(index).label() + "'");
  }
  return it->second;
}

bool MatrixFamily::unitary() const {
  for (const auto& [idx, m] : entries_) {
    if (unitarity_defect(m) > kUnitaryTolerance) return false;
  }
  return true;
}

double MatrixFamily::ell_infty_norm() const {
  double sup = 0.0;
  for (const auto& [idx, m] : entries_) sup = std::max(sup, spectral_norm(m));
  return sup;
}

MatrixFamily MatrixFamily::identity(const DualPtr& dual) { return scalar(dual, 1.0); }

MatrixFamily MatrixFamily::scalar(const DualPtr& dual, cd c) {
  MatrixFamily out(dual);
  for (std::size_t idx = 0; idx < dual->size(); ++idx) {
    const int n = dual->irrep(idx).n();
    out.set(idx, c * MatrixC::Identity(n, n));
  }
  return out;
}

MatrixFamily MatrixFamily::haar(const DualPtr& dual, Rng& rng) {
  MatrixFamily out(dual);
  for (std::size_t idx = 0; idx < dual->size(); ++idx) {
    out.set(idx, haar_unitary(dual->irrep(idx).n(), rng));
  }
  return out;
}

MatrixR gaussian_matrix(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("gaussian_matrix: n must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  MatrixR g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g(i, j) = rng.normal() * scale;
  }
  return g;
}

MatrixC ginibre_matrix(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("ginibre_matrix: n must be >= 1");
  MatrixC z(n, n);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = cd(re, im) * scale;
    }
  }
  return z;
}

MatrixC random_contraction(int n, Rng& rng, double scale) {
  MatrixC z = ginibre_matrix(n, rng);
  const double r = rng.uniform();
  return z * (scale * r / spectral_norm(z));
}

FourierCoeffs random_coeffs(const DualPtr& dual, Rng& rng) {
  FourierCoeffs f(dual);
  for (std::size_t idx = 0; idx < dual->size(); ++idx) {
    f.set(idx, ginibre_matrix(dual->irrep(idx).n(), rng));
  }
  return f;
}

MatrixFamily random_ball_family(const DualPtr& dual, Rng& rng) {
  MatrixFamily b(dual);
  for (std::size_t idx = 0; idx < dual->size(); ++idx) {
    b.set(idx, random_contraction(dual->irrep(idx).n(), rng));
  }
  return b;
}

MatrixC haar_unitary(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  const MatrixC z = ginibre_matrix(n, rng);
  Eigen::HouseholderQR<MatrixC> qr(z);
  MatrixC q = qr.householderQ();
  const MatrixC& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const cd rjj = r(j, j);
    const double mod = std::abs(rjj);
    q.col(j) *= mod > 0.0 ? rjj / mod : cd(1.0);
  }
  return q;
}

MonteCarloEstimate expected_operator_norm(int n, int trials, Rng& rng) {
  if (trials < 2) throw std::invalid_argument("expected_operator_norm: trials must be >= 2");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = spectral_norm(gaussian_matrix(n, rng));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / trials;
  const double var = std::max(0.0, (sum_sq - trials * mean * mean) / (trials - 1));
  return {mean, std::sqrt(var / trials)};
}

FourierCoeffs randomize(const FourierCoeffs& f, const MatrixFamily& family) {
  if (!same_dual(f.dual(), family.dual())) {
    throw std::invalid_argument("randomize: family and coefficients live on different duals");
  }
  FourierCoeffs out(f.dual());
  for (const auto& [idx, m] : f.support()) out.set(idx, family.at(idx) * m);
  return out;
}

double l2_invariance_check(const FourierCoeffs& f, const MatrixFamily& family) {
  if (!family.unitary()) throw std::invalid_argument("l2_invariance_check: family is not unitary");
  return std::abs(ell2_norm(randomize(f, family)) - ell2_norm(f));
}

std::array<MatrixC, 4> four_unitary_decomposition(const MatrixC& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("four_unitary_decomposition: X must be square");
  const double norm = spectral_norm(x);
  if (norm > 1.0 + kNormSlack) {
    throw std::domain_error("four_unitary_decomposition: ||X|| = " + std::to_string(norm) + " > 1");
  }
  const cd i(0.0, 1.0);
  const MatrixC h1 = (x + x.adjoint()) / 2.0;
  const MatrixC h2 = (x - x.adjoint()) / (2.0 * i);
  const MatrixC s1 = complementary_sqrt(h1);
  const MatrixC s2 = complementary_sqrt(h2);
  return {MatrixC(h1 + i * s1), MatrixC(h1 - i * s1), MatrixC(i * (h2 + i * s2)),
          MatrixC(i * (h2 - i * s2))};
}

BallRandomization randomize_ball(const FourierCoeffs& f, const MatrixFamily& b) {
  if (b.ell_infty_norm() > 1.0 + kNormSlack) {
    throw std::domain_error("randomize_ball: multiplier family is outside the unit ball");
  }
  std::array<MatrixFamily, 4> v{MatrixFamily(b.dual()), MatrixFamily(b.dual()),
                                MatrixFamily(b.dual()), MatrixFamily(b.dual())};
  for (const auto& [idx, m] : b.entries()) {
    auto parts = four_unitary_decomposition(m);
    for (std::size_t j = 0; j < 4; ++j) v[j].set(idx, std::move(parts[j]));
  }
  FourierCoeffs f_b = randomize(f, b);
  FourierCoeffs sum(f.dual());
  for (const auto& family : v) sum = sum + randomize(f, family);
  FourierCoeffs reconstructed = sum.scaled(0.5);

  double deviation = 0.0;
  for (const auto& [idx, m] : f_b.support()) {
    deviation = std::max(deviation, spectral_norm(MatrixC(m - reconstructed.at(idx))));
  }
  return {std::move(f_b), std::move(v), std::move(reconstructed), deviation};
}

}  // namespace cqg
