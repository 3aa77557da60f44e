#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cqg/fourier_core.hpp"
#include "cqg/rng.hpp"

namespace cqg {

inline constexpr double kExactGroupTolerance = 1e-12;
inline constexpr double kQuadratureSchurTolerance = 1e-8;
/// Slack granted to inequality margins that are measured by quadrature.
inline constexpr double kQuadratureMarginAllowance = 1e-6;

struct FiniteGroupIrrep {
  std::string label;
  int n = 1;
  /// One unitary n x n matrix per group element, in element order.
  std::vector<MatrixC> matrices;
};

/// A finite group given by its multiplication table and a complete list of
/// unitary irreps. The constructor checks the group law, the homomorphism
/// property, Peter-Weyl (sum n^2 = |G|) and the Schur relations; any failure
/// throws std::invalid_argument.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> mult,
                   std::vector<FiniteGroupIrrep> irreps);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mult_.size()); }
  int multiply(int g, int h) const { return mult_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  int identity() const { return identity_; }
  const std::vector<std::vector<int>>& mult() const { return mult_; }
  const std::vector<FiniteGroupIrrep>& irreps() const { return irreps_; }
  const DualPtr& dual() const { return dual_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<FiniteGroupIrrep> irreps_;
  DualPtr dual_;
};

FiniteGroupTable cyclic_group(int n);
/// S_3 with irreps (trivial, sign, standard).
FiniteGroupTable symmetric_group_s3();

/// A probability measure on a classical compact group (exact uniform average
/// on a finite group, or a quadrature rule on SU(2)) together with the irrep
/// matrices of a Kac dual at every node.
struct HaarModel {
  DualPtr dual;
  std::vector<double> weights;
  /// reps[node][irrep]
  std::vector<std::vector<MatrixC>> reps;

  std::size_t num_nodes() const { return weights.size(); }

  static HaarModel from_table(const FiniteGroupTable& table);
};

/// Spin-k/2 irrep of SU(2): the action p(v) -> p(g^T v) on homogeneous
/// polynomials of degree k, written in the orthonormal basis
/// sqrt(C(k,m)) x^{k-m} y^m. For k = 1 this is g itself.
MatrixC su2_irrep_matrix(int k, const MatrixC& g);

/// g = [[a, -conj(b)], [b, conj(a)]] with a = cos(theta/2) e^{i phi},
/// b = sin(theta/2) e^{i psi}.
MatrixC su2_element(double theta, double phi, double psi);

/// Product rule on SU(2) in Euler/Hopf coordinates: Gauss-Legendre in
/// cos(theta) with `resolution` points, uniform in both phases with
/// 2*resolution points each. Integrates every product of two matrix
/// coefficients of degree <= resolution-1 exactly.
class SU2Quadrature {
 public:
  explicit SU2Quadrature(int resolution);

  int resolution() const { return resolution_; }
  const std::vector<MatrixC>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  /// Largest k for which Schur orthogonality is reproduced to 1e-8, found by
  /// direct test at construction.
  int kmax_valid() const { return kmax_valid_; }

  /// Haar model for the classical SU(2) dual truncated at kmax <= kmax_valid.
  HaarModel model(int kmax) const;

 private:
  int resolution_;
  std::vector<MatrixC> nodes_;
  std::vector<double> weights_;
  int kmax_valid_ = -1;
};

inline constexpr int kDefaultSU2Resolution = 8;

SU2Quadrature make_su2_quadrature(int resolution = kDefaultSU2Resolution);

/// f(node) = sum_pi n_pi tr(f^(pi) pi(node)).
cd evaluate(const FourierCoeffs& f, const HaarModel& model, std::size_t node);
std::vector<cd> evaluate_all(const FourierCoeffs& f, const HaarModel& model);
/// Pointwise value on SU(2) for a coefficient family over a classical su2 dual.
cd evaluate_su2(const FourierCoeffs& f, const MatrixC& g);

/// f^(pi) = sum_x w_x f(x) pi(x)^*, i.e. f^(pi)_{i,j} = h(f (u_{j,i})^*).
FourierCoeffs extract_coefficients(const std::vector<cd>& values, const HaarModel& model);

double l1_norm_classical(const FourierCoeffs& f, const HaarModel& model);
double linfty_norm_classical(const FourierCoeffs& f, const HaarModel& model);
/// (sum_x w_x |f(x)|^2)^{1/2}
double l2_norm_classical(const FourierCoeffs& f, const HaarModel& model);

struct HelgasonGaussian {
  double mean = 0.0;
  double std_error = 0.0;
  /// sqrt(2/pi) (sum_pi n_pi tr(f^* f))^{1/2}
  double predicted = 0.0;
  /// Exact expectation of the double integral.
  double exact = 0.0;
  /// Every node has a real-direction integrand, so exact == predicted.
  bool real_direction = false;
};

/// Monte Carlo estimate of
///   int_G E | sum_pi sum_{i,j} sqrt(n_pi) g^pi_{i,j} (f^(pi) pi(x))_{j,i} | dx
/// with real standard Gaussians g. At a fixed node the sum is a planar Gaussian
/// with covariance eigenvalues l1 >= l2, l1 + l2 = sum_pi n_pi tr(f^* f), and
///   E|Z| = sqrt(2/pi) sqrt(l1) E(1 - l2/l1)
/// (complete elliptic integral of the second kind, parameter m). This equals
/// `predicted` when l2 = 0 and lies in [predicted, sqrt(l1 + l2)] in general.
HelgasonGaussian helgason_gaussian_mean(const FourierCoeffs& f, int trials, Rng& rng,
                                        const HaarModel& model);

enum class Lemma35Side { upper, lower };

struct Lemma35Result {
  double bound = 0.0;
  double actual = 0.0;
  /// Positive when the inequality holds.
  double margin = 0.0;
};

/// Coefficient norm bounds on one irrep block, row i, column j.
///   upper: || sum_k A_{i,k} (u_{k,j})^* ||_inf <= (Q^{1/2})_{j,j} ||row i of A Q^{-1/2}||
///   lower: || sum_k (B Q)_{i,k} u_{k,j} ||_1 >= (Q^{-1/2})_{j,j} / d ||row i of B Q^{1/2}||
Lemma35Result lemma35_check(const MatrixC& m, std::size_t irrep, int i, int j,
                            const HaarModel& model, Lemma35Side side);

/// h(|chi_k|) on SU(2) through the Weyl integration formula:
///   (2/pi) int_0^pi |sin((k+1) t) sin t| dt, integrated lobe by lobe.
double character_l1(int k);

struct Cotype2Estimate {
  double ratio = 0.0;
  double std_error = 0.0;
};

/// E|| sum_j g_j x_j ||_1 / (sum_j ||x_j||_1^2)^{1/2}.
Cotype2Estimate cotype2_ratio(const std::vector<FourierCoeffs>& xs, int trials, Rng& rng,
                              const HaarModel& model);

struct HelgasonInstance {
  double sup_l1_over_u = 0.0;
  double ell2 = 0.0;
  double ratio = 0.0;
};

/// sup over sampled Haar families U of ||f_U||_1, next to ||f||_2.
HelgasonInstance helgason_instance_report(const FourierCoeffs& f, int num_unitaries, Rng& rng,
                                          const HaarModel& model);

}  // namespace cqg
