#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cqg {

using cd = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;
using VectorC = Eigen::VectorXcd;
using VectorR = Eigen::VectorXd;

/// Largest singular value.
double spectral_norm(const MatrixC& m);
double spectral_norm(const MatrixR& m);

/// Sum of singular values, tr|m|.
double trace_norm(const MatrixC& m);

/// ||m* m - I|| in spectral norm.
double unitarity_defect(const MatrixC& m);

/// sqrt(I - h^2) for Hermitian h, eigenvalues clamped to [-1, 1].
MatrixC complementary_sqrt(const MatrixC& h);

}  // namespace cqg
