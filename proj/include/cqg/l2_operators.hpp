#pragma once

#include <utility>
#include <vector>

#include "cqg/dual_data.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

class FourierCoeffs;
class MatrixFamily;
class Rng;

using IndexPair = std::pair<int, int>;

/// h((u_{s,t})^* u_{i,j}) = delta_{j,t} (Q^{-1})_{i,s} / d within one irrep.
cd schur_inner(const IrrepData& irrep, IndexPair ij, IndexPair st);

/// h(u_{s,t} (u_{i,j})^*) = delta_{i,s} Q_{j,t} / d within one irrep.
cd schur_inner_adjoint(const IrrepData& irrep, IndexPair ij, IndexPair st);

/// Diagonal Haar Gram weights of one irrep block.
///   gram_u(i,j)     = h(u_{i,j}^* u_{i,j})       = (Q^{-1})_{i,i} / d
///   gram_ustar(i,j) = h(u_{i,j} u_{i,j}^*)       = Q_{j,j} / d
struct BlockGram {
  MatrixR gram_u;
  MatrixR gram_ustar;

  static BlockGram of(const IrrepData& irrep);
};

/// Operator norm of T_B : u_{j,i} -> sum_p (Q^{-1})_{j,j} (u_{p,j})^* B_{p,i}
/// on the L2 span of one irrep block, i.e. sigma_max(D2^{1/2} M D1^{-1/2})
/// for the coefficient matrix M and the Gram diagonals D1 (domain) and D2
/// (codomain).
double tb_block_norm(const MatrixC& b, const IrrepData& irrep);

struct HxIdentity {
  cd lhs;
  cd rhs;
  double deviation = 0.0;
};

/// Evaluates h(x) for
///   x = sum_alpha sum_{i,j,k,p} d (f^ Q)_{i,j} (Q^{-1})_{k,k} B_{p,i} u_{j,k} (u_{p,k})^*
/// term by term through the Schur relations (lhs) and compares it with
/// sum_alpha n_alpha tr(f^(alpha) Q_alpha B_alpha) (rhs).
HxIdentity hx_pairing_identity(const FourierCoeffs& f, const MatrixFamily& b);

struct TraceNormDuality {
  double exact = 0.0;
  double aligned = 0.0;
  double random_sup = 0.0;
};

/// tr|A| three ways: singular values, Re tr(U0 A) for the aligned unitary
/// U0 = V W^* from A = W S V^*, and the max of Re tr(U A) over `trials` Haar
/// unitaries.
TraceNormDuality trace_norm_duality(const MatrixC& a, int trials, Rng& rng);

/// The unitary U0 with tr(U0 A) = tr|A|.
MatrixC aligned_unitary(const MatrixC& a);

/// Central family f^(alpha) = (c_alpha / d_alpha) Q_alpha^{-1} on the first
/// c.size() irreps of the dual.
FourierCoeffs central_coeffs(const std::vector<cd>& c, const DualPtr& dual);

struct CentralSum {
  double ell2_sq = 0.0;
  double sum_c_sq = 0.0;
  double deviation = 0.0;
};

CentralSum central_sum_check(const std::vector<cd>& c, const DualPtr& dual);

}  // namespace cqg
