#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "cqg/fourier_core.hpp"
#include "cqg/rng.hpp"

namespace cqg {

/// Slack on contraction/ball preconditions and on unitarity of the
/// decomposition outputs.
inline constexpr double kNormSlack = 1e-9;
/// A family counts as unitary when every ||U^*U - I|| is below this.
inline constexpr double kUnitaryTolerance = 1e-10;

/// A finitely supported family alpha -> square matrix of size n_alpha, used
/// for randomizers U = (U_alpha) and multipliers B = (B_alpha).
class MatrixFamily {
 public:
  explicit MatrixFamily(DualPtr dual) : dual_(std::move(dual)) {}

  const DualPtr& dual() const { return dual_; }
  const std::map<std::size_t, MatrixC>& entries() const { return entries_; }

  void set(std::size_t index, MatrixC m);
  bool contains(std::size_t index) const { return entries_.count(index) != 0; }
  const MatrixC& at(std::size_t index) const;

  bool unitary() const;
  double ell_infty_norm() const;

  static MatrixFamily identity(const DualPtr& dual);
  static MatrixFamily scalar(const DualPtr& dual, cd c);
  static MatrixFamily haar(const DualPtr& dual, Rng& rng);

 private:
  DualPtr dual_;
  std::map<std::size_t, MatrixC> entries_;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// n x n matrix with i.i.d. N(0,1)/sqrt(n) entries.
MatrixR gaussian_matrix(int n, Rng& rng);

/// Haar-distributed element of U(n): complex Ginibre, QR, then the columns of
/// Q are rotated by the phases of diag(R).
MatrixC haar_unitary(int n, Rng& rng);

/// Monte Carlo mean and standard error of ||gaussian_matrix(n)||.
MonteCarloEstimate expected_operator_norm(int n, int trials, Rng& rng);

/// n x n matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
MatrixC ginibre_matrix(int n, Rng& rng);

/// Ginibre matrix rescaled to spectral norm r * scale, r uniform on (0, 1).
MatrixC random_contraction(int n, Rng& rng, double scale = 1.0);

/// Ginibre coefficients on every irrep of the dual.
FourierCoeffs random_coeffs(const DualPtr& dual, Rng& rng);

/// Family of random contractions on every irrep of the dual.
MatrixFamily random_ball_family(const DualPtr& dual, Rng& rng);

/// f_U: coefficient alpha becomes U_alpha f^(alpha).
FourierCoeffs randomize(const FourierCoeffs& f, const MatrixFamily& family);

/// | ||f_U||_2 - ||f||_2 | for a unitary family.
double l2_invariance_check(const FourierCoeffs& f, const MatrixFamily& family);

/// X = (v1 + v2 + v3 + v4) / 2 with every v_j unitary, built from
/// h1 = (X + X^*)/2, h2 = (X - X^*)/(2i):
///   v1,2 = h1 +- i sqrt(I - h1^2),  v3,4 = i (h2 +- i sqrt(I - h2^2)).
/// Requires ||X|| <= 1 + kNormSlack.
std::array<MatrixC, 4> four_unitary_decomposition(const MatrixC& x);

struct BallRandomization {
  FourierCoeffs f_b;
  std::array<MatrixFamily, 4> unitaries;
  /// (sum_j randomize(f, V_j)) / 2
  FourierCoeffs reconstructed;
  /// max coefficientwise ||f_b - reconstructed|| (operator norm).
  double deviation = 0.0;
};

/// f_B for B in the unit ball of l^infty, together with its expression through
/// four unitary randomizations.
BallRandomization randomize_ball(const FourierCoeffs& f, const MatrixFamily& b);

}  // namespace cqg
