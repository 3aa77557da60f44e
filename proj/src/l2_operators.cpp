#include "cqg/l2_operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cqg/fourier_core.hpp"
#include "cqg/random_series.hpp"

namespace cqg {

namespace {

void check_index(const IrrepData& irrep, IndexPair p) {
  if (p.first < 0 || p.second < 0 || p.first >= irrep.n() || p.second >= irrep.n()) {
    throw std::out_of_range("matrix coefficient index out of range for irrep '" + irrep.label() +
                            "'");
  }
}

}  // namespace

cd schur_inner(const IrrepData& irrep, IndexPair ij, IndexPair st) {
  check_index(irrep, ij);
  check_index(irrep, st);
  const auto [i, j] = ij;
  const auto [s, t] = st;
  if (j != t || i != s) return 0.0;
  return irrep.q_inv(i) / irrep.d();
}

cd schur_inner_adjoint(const IrrepData& irrep, IndexPair ij, IndexPair st) {
  check_index(irrep, ij);
  check_index(irrep, st);
  const auto [i, j] = ij;
  const auto [s, t] = st;
  if (i != s || j != t) return 0.0;
  return irrep.q(j) / irrep.d();
}

BlockGram BlockGram::of(const IrrepData& irrep) {
  const int n = irrep.n();
  BlockGram g{MatrixR(n, n), MatrixR(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g.gram_u(i, j) = schur_inner(irrep, {i, j}, {i, j}).real();
      g.gram_ustar(i, j) = schur_inner_adjoint(irrep, {i, j}, {i, j}).real();
    }
  }
  return g;
}

double tb_block_norm(const MatrixC& b, const IrrepData& irrep) {
  const int n = irrep.n();
  if (b.rows() != n || b.cols() != n) {
    throw std::invalid_argument("tb_block_norm: B must be " + std::to_string(n) + "x" +
                                std::to_string(n));
  }
  const BlockGram gram = BlockGram::of(irrep);
  // Column (j,i) <-> u_{j,i}; row (p,j) <-> (u_{p,j})^*.
  MatrixC scaled = MatrixC::Zero(n * n, n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int col = j * n + i;
      const double dom = std::sqrt(gram.gram_u(j, i));
      for (int p = 0; p < n; ++p) {
        const int row = p * n + j;
        const double cod = std::sqrt(gram.gram_ustar(p, j));
        scaled(row, col) = cod * irrep.q_inv(j) * b(p, i) / dom;
      }
    }
  }
  return spectral_norm(scaled);
}

HxIdentity hx_pairing_identity(const FourierCoeffs& f, const MatrixFamily& b) {
  if (!same_dual(f.dual(), b.dual())) {
    throw std::invalid_argument("hx_pairing_identity: f and B live on different duals");
  }
  HxIdentity out;
  for (const auto& [idx, fhat] : f.support()) {
    if (!b.contains(idx)) continue;
    const auto& irrep = f.dual()->irrep(idx);
    const MatrixC& bm = b.at(idx);
    const int n = irrep.n();
    const double d = irrep.d();
    MatrixC fq = fhat;
    for (int j = 0; j < n; ++j) fq.col(j) *= irrep.q(j);

    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int p = 0; p < n; ++p) {
            // h(u_{j,k} (u_{p,k})^*)
            const cd h = schur_inner_adjoint(irrep, {p, k}, {j, k});
            out.lhs += d * fq(i, j) * irrep.q_inv(k) * bm(p, i) * h;
          }
        }
      }
    }
    out.rhs += static_cast<double>(n) * (fq * bm).trace();
  }
  out.deviation = std::abs(out.lhs - out.rhs);
  return out;
}

MatrixC aligned_unitary(const MatrixC& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("aligned_unitary: A must be square");
  Eigen::JacobiSVD<MatrixC> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

TraceNormDuality trace_norm_duality(const MatrixC& a, int trials, Rng& rng) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm_duality: A must be square");
  TraceNormDuality out;
  out.exact = trace_norm(a);
  out.aligned = (aligned_unitary(a) * a).trace().real();
  out.random_sup = trials > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
  for (int t = 0; t < trials; ++t) {
    const MatrixC u = haar_unitary(static_cast<int>(a.rows()), rng);
    out.random_sup = std::max(out.random_sup, (u * a).trace().real());
  }
  return out;
}

FourierCoeffs central_coeffs(const std::vector<cd>& c, const DualPtr& dual) {
  if (c.size() > dual->size()) {
    throw std::invalid_argument("central_coeffs: more coefficients than irreps");
  }
  FourierCoeffs out(dual);
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const auto& irrep = dual->irrep(idx);
    MatrixC m = MatrixC::Zero(irrep.n(), irrep.n());
    for (int i = 0; i < irrep.n(); ++i) m(i, i) = c[idx] / irrep.d() * irrep.q_inv(i);
    out.set(idx, std::move(m));
  }
  return out;
}

CentralSum central_sum_check(const std::vector<cd>& c, const DualPtr& dual) {
  CentralSum out;
  const double norm = ell2_norm(central_coeffs(c, dual));
  out.ell2_sq = norm * norm;
  for (const auto& v : c) out.sum_c_sq += std::norm(v);
  const double diff = std::abs(out.ell2_sq - out.sum_c_sq);
  out.deviation = out.sum_c_sq > 0.0 ? diff / out.sum_c_sq : diff;
  return out;
}

}  // namespace cqg
