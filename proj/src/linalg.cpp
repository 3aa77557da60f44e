#include "cqg/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cqg {

namespace {

// sigma_max^2 as the top eigenvalue of the Gram matrix.
template <typename M>
double top_singular_value(const M& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= 16 && m.cols() <= 16) {
    Eigen::JacobiSVD<M> svd(m);
    return svd.singularValues()(0);
  }
  const M gram = m.cols() <= m.rows() ? M(m.adjoint() * m) : M(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

double spectral_norm(const MatrixC& m) { return top_singular_value(m); }
double spectral_norm(const MatrixR& m) { return top_singular_value(m); }

double trace_norm(const MatrixC& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixC> svd(m);
  return svd.singularValues().sum();
}

double unitarity_defect(const MatrixC& m) {
  return spectral_norm(MatrixC(m.adjoint() * m - MatrixC::Identity(m.cols(), m.cols())));
}

MatrixC complementary_sqrt(const MatrixC& h) {
  const MatrixC herm = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatrixC> es(herm);
  VectorR s(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double lam = std::clamp(es.eigenvalues()(i), -1.0, 1.0);
    s(i) = std::sqrt(std::max(0.0, 1.0 - lam * lam));
  }
  return es.eigenvectors() * s.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace cqg
