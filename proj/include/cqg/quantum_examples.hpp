#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqg/fourier_core.hpp"

namespace cqg {

/// sum_alpha (d_alpha / n_alpha) tr(Q_alpha f^(alpha)^* f^(alpha))
double nonkac_quantity(const FourierCoeffs& f);

/// log d_k for SU_q(2), d_k = q^{-k} + q^{-k+2} + ... + q^k, evaluated as
/// -k log q + log((1 - q^{2(k+1)}) / (1 - q^2)).
double suq2_log_dimension(double q, int k);

struct CorollaryTerm {
  int k = 0;
  /// tr(Q_k f^* f)
  double weight = 0.0;
  /// d_k^{-eps} <= q^{eps k}, from d_k >= q^{-k}
  bool dimension_step = false;
  /// (k+1) q^{eps k} <= 1 / (1 - q^eps)^2
  bool series_step = false;
};

struct CorollaryChain {
  double lhs = 0.0;
  double rhs = 0.0;
  bool termwise_ok = false;
  std::vector<CorollaryTerm> terms;
};

/// Compares sum_k d_k^{1-eps} tr(Q_k f^* f) with
/// (1 - q^eps)^{-2} sum_k (d_k / n_k) tr(Q_k f^* f) on an SU_q(2) family,
/// checking both per-term inequalities of CorollaryTerm along the way.
CorollaryChain corollary_chain_check(double q, double eps, const FourierCoeffs& f, int kmax);

struct GrowthRow {
  int k = 0;
  int n = 0;
  double d = 0.0;
  double ratio = 0.0;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  /// For SU_q(2) (q given): every d_k >= q^{-k}. Always true otherwise.
  bool dimension_bound_ok = true;
};

GrowthReport growth_report(const DualDescriptor& dual, int kmax,
                           std::optional<double> q = std::nullopt);

/// CSV with header "k,n,d,ratio", one row per irrep, full double precision.
std::string growth_csv(const GrowthReport& report);

}  // namespace cqg
