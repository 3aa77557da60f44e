#include "cqg/dual_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace cqg {

IrrepData::IrrepData(std::string label, std::vector<double> q_diag)
    : label_(std::move(label)), q_diag_(std::move(q_diag)) {
  if (q_diag_.empty()) {
    throw std::invalid_argument("irrep '" + label_ + "' has dimension 0");
  }
  double tr = 0.0;
  double tr_inv = 0.0;
  for (double v : q_diag_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("irrep '" + label_ + "': Q entries must be finite and positive");
    }
    tr += v;
    tr_inv += 1.0 / v;
    kac_ = kac_ && std::abs(v - 1.0) <= kKacTolerance;
  }
  if (std::abs(tr - tr_inv) > kTraceTolerance * tr) {
    throw std::invalid_argument("irrep '" + label_ + "': tr(Q) != tr(Q^-1)");
  }
  d_ = tr;
}

DualDescriptor::DualDescriptor(std::string name, std::vector<IrrepData> irreps)
    : name_(std::move(name)), irreps_(std::move(irreps)) {
  if (irreps_.empty()) {
    throw std::invalid_argument("dual '" + name_ + "' has no irreps");
  }
  const auto& first = irreps_.front();
  if (first.n() != 1 || first.q_diag()[0] != 1.0) {
    throw std::invalid_argument("dual '" + name_ + "': first irrep must be the trivial one");
  }
  std::unordered_set<std::string> seen;
  for (const auto& irrep : irreps_) {
    if (!seen.insert(irrep.label()).second) {
      throw std::invalid_argument("dual '" + name_ + "': duplicate label '" + irrep.label() + "'");
    }
    kac_ = kac_ && irrep.kac();
  }
}

std::optional<std::size_t> DualDescriptor::find(const std::string& label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    if (irreps_[i].label() == label) return i;
  }
  return std::nullopt;
}

std::size_t DualDescriptor::index_of(const std::string& label) const {
  if (auto idx = find(label)) return *idx;
  throw std::out_of_range("dual '" + name_ + "' has no irrep labelled '" + label + "'");
}

DualPtr make_trivial_dual() {
  return std::make_shared<const DualDescriptor>("trivial",
                                                std::vector<IrrepData>{IrrepData("0", {1.0})});
}

DualPtr make_kac_dual(std::string name, const std::vector<int>& dims) {
  std::vector<IrrepData> irreps;
  irreps.reserve(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 1) throw std::invalid_argument("classical dimension must be >= 1");
    irreps.emplace_back(std::to_string(k), std::vector<double>(static_cast<std::size_t>(dims[k]), 1.0));
  }
  return std::make_shared<const DualDescriptor>(std::move(name), std::move(irreps));
}

DualPtr make_su2_dual(int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<int> dims;
  for (int k = 0; k <= kmax; ++k) dims.push_back(k + 1);
  return make_kac_dual("su2", dims);
}

DualPtr make_suq2_dual(double q, int kmax) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("SU_q(2) requires 0 < q < 1");
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<IrrepData> irreps;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<double> diag(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i) diag[static_cast<std::size_t>(i)] = std::pow(q, k - 2 * i);
    irreps.emplace_back(std::to_string(k), std::move(diag));
  }
  return std::make_shared<const DualDescriptor>("suq2", std::move(irreps));
}

std::vector<BigInt> onplus_dimensions(int N, int kmax) {
  if (N < 2) throw std::domain_error("O_N^+ requires N >= 2");
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<BigInt> dims{1};
  if (kmax >= 1) dims.emplace_back(N);
  for (int k = 1; k < kmax; ++k) {
    dims.push_back(N * dims[static_cast<std::size_t>(k)] - dims[static_cast<std::size_t>(k - 1)]);
  }
  return dims;
}

DualPtr make_onplus_dual(int N, int kmax) {
  const auto exact = onplus_dimensions(N, kmax);
  std::vector<int> dims;
  for (const auto& v : exact) {
    if (v > kMaxMaterializedDim) {
      throw std::length_error("O_N^+ dimension " + v.str() + " too large to materialize");
    }
    dims.push_back(v.convert_to<int>());
  }
  return make_kac_dual("onplus", dims);
}

}  // namespace cqg
