#include "cqg/quantum_examples.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cqg {

namespace {

// tr(Q X^* X)
double weighted_hs(const IrrepData& irrep, const MatrixC& x) {
  double tr = 0.0;
  for (int j = 0; j < irrep.n(); ++j) tr += irrep.q(j) * x.col(j).squaredNorm();
  return tr;
}

constexpr double kChainSlack = 1e-12;

}  // namespace

double nonkac_quantity(const FourierCoeffs& f) {
  double total = 0.0;
  for (const auto& [idx, fhat] : f.support()) {
    const auto& irrep = f.dual()->irrep(idx);
    total += irrep.d() / irrep.n() * weighted_hs(irrep, fhat);
  }
  return total;
}

double suq2_log_dimension(double q, int k) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("SU_q(2) requires 0 < q < 1");
  return -k * std::log(q) + std::log1p(-std::pow(q, 2 * (k + 1))) - std::log1p(-q * q);
}

CorollaryChain corollary_chain_check(double q, double eps, const FourierCoeffs& f, int kmax) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("corollary_chain_check: need 0 < q < 1");
  if (!(eps > 0.0)) throw std::domain_error("corollary_chain_check: need eps > 0");
  const auto& dual = *f.dual();
  if (static_cast<int>(dual.size()) < kmax + 1) {
    throw std::invalid_argument("corollary_chain_check: dual is shorter than kmax");
  }
  const double series_bound = 1.0 / ((1.0 - std::pow(q, eps)) * (1.0 - std::pow(q, eps)));

  CorollaryChain out;
  out.termwise_ok = true;
  double nonkac = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const auto& irrep = dual.irrep(static_cast<std::size_t>(k));
    if (irrep.n() != k + 1) {
      throw std::invalid_argument("corollary_chain_check: dual is not an SU_q(2) dual");
    }
    CorollaryTerm term;
    term.k = k;
    term.weight = weighted_hs(irrep, f.at(static_cast<std::size_t>(k)));
    // d_k^{1-eps} in the log domain
    const double log_d = suq2_log_dimension(q, k);
    if (std::abs(std::exp(log_d) - irrep.d()) > 1e-10 * irrep.d()) {
      throw std::invalid_argument("corollary_chain_check: dual does not match q");
    }
    const double log_q = std::log(q);
    term.dimension_step = -eps * log_d <= eps * k * log_q + kChainSlack;
    const double lhs_factor = (k + 1) * std::exp(eps * k * log_q);
    term.series_step = lhs_factor <= series_bound * (1.0 + kChainSlack);
    out.termwise_ok = out.termwise_ok && term.dimension_step && term.series_step;

    out.lhs += std::exp((1.0 - eps) * log_d) * term.weight;
    nonkac += irrep.d() / irrep.n() * term.weight;
    out.terms.push_back(term);
  }
  out.rhs = series_bound * nonkac;
  return out;
}

GrowthReport growth_report(const DualDescriptor& dual, int kmax, std::optional<double> q) {
  GrowthReport out;
  const int last = std::min(kmax, static_cast<int>(dual.size()) - 1);
  for (int k = 0; k <= last; ++k) {
    const auto& irrep = dual.irrep(static_cast<std::size_t>(k));
    out.rows.push_back({k, irrep.n(), irrep.d(), irrep.d() / irrep.n()});
    if (q) {
      out.dimension_bound_ok = out.dimension_bound_ok && irrep.d() >= std::pow(*q, -k);
    }
  }
  return out;
}

std::string growth_csv(const GrowthReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "k,n,d,ratio\n";
  for (const auto& r : report.rows) os << r.k << ',' << r.n << ',' << r.d << ',' << r.ratio << '\n';
  return os.str();
}

}  // namespace cqg
