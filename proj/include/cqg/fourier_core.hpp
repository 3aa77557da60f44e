#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "cqg/dual_data.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

/// A finitely supported family of matrices indexed by a dual: the Fourier
/// coefficients (f^(alpha))_alpha of a polynomial element or a measure.
///
/// Entries are keyed by irrep index in the dual. Missing indices are zero.
/// Every stored matrix is n_alpha x n_alpha.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(DualPtr dual) : dual_(std::move(dual)) {}

  const DualPtr& dual() const { return dual_; }
  const std::map<std::size_t, MatrixC>& support() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Stores m at irrep `index`, replacing any previous value.
  void set(std::size_t index, MatrixC m);
  void set(const std::string& label, MatrixC m) { set(dual_->index_of(label), std::move(m)); }

  bool contains(std::size_t index) const { return entries_.count(index) != 0; }
  /// Coefficient at `index`; the zero matrix when outside the support.
  MatrixC at(std::size_t index) const;

  FourierCoeffs scaled(cd c) const;
  FourierCoeffs operator+(const FourierCoeffs& other) const;
  FourierCoeffs operator-(const FourierCoeffs& other) const;

 private:
  DualPtr dual_;
  std::map<std::size_t, MatrixC> entries_;
};

/// sup_alpha ||X_alpha|| (operator norm); 0 on empty support.
double ell_infty_norm(const FourierCoeffs& x);

/// (sum_alpha d_alpha tr(Q_alpha X_alpha^* X_alpha))^{1/2}
double ell2_norm(const FourierCoeffs& x);

/// sum_alpha d_alpha tr|X_alpha Q_alpha|
double ell1_norm(const FourierCoeffs& x);

/// <mu, f^*> = sum_alpha d_alpha tr(mu^(alpha) Q_alpha f^(alpha)^*).
/// Linear in mu, conjugate linear in f.
cd pairing(const FourierCoeffs& mu, const FourierCoeffs& f);

/// Coefficients of the convolution f1 * f2, (f1 * f2)^(alpha) = f2^(alpha) f1^(alpha).
FourierCoeffs convolve(const FourierCoeffs& f1, const FourierCoeffs& f2);

/// Convolution unit: Id_{n_alpha} on every irrep of the dual.
FourierCoeffs convolution_unit(const DualPtr& dual);

/// L2 norm of f = sum_alpha d_alpha tr(f^(alpha) Q_alpha u^alpha), computed by
/// expanding f in the matrix coefficients u_{a,b} and summing the Haar-state
/// Gram entries h(u_{s,t}^* u_{a,b}) = delta_{b,t} (Q^{-1})_{a,s} / d.
double plancherel_gram_norm(const FourierCoeffs& f);

/// Coefficient family whose expansion is exactly the matrix coefficient u^alpha_{a,b}.
FourierCoeffs matrix_coefficient(const DualPtr& dual, std::size_t index, int a, int b);

/// Throws std::invalid_argument unless both families live on the same dual.
void require_same_dual(const FourierCoeffs& a, const FourierCoeffs& b);

}  // namespace cqg
