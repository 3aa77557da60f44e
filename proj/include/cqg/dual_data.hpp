#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cqg {

/// Tolerances shared by the descriptor validators.
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kKacTolerance = 1e-12;

/// One irreducible representation of the underlying compact quantum group,
/// described only through its dual data: the classical dimension n and the
/// diagonal of the positive matrix Q (so that d = tr Q = tr Q^{-1}).
class IrrepData {
 public:
  IrrepData(std::string label, std::vector<double> q_diag);

  const std::string& label() const { return label_; }
  int n() const { return static_cast<int>(q_diag_.size()); }
  const std::vector<double>& q_diag() const { return q_diag_; }
  double d() const { return d_; }
  bool kac() const { return kac_; }

  /// (Q^{-1})_{i,i}
  double q_inv(int i) const { return 1.0 / q_diag_[static_cast<std::size_t>(i)]; }
  double q(int i) const { return q_diag_[static_cast<std::size_t>(i)]; }

  bool operator==(const IrrepData& other) const {
    return label_ == other.label_ && q_diag_ == other.q_diag_;
  }

 private:
  std::string label_;
  std::vector<double> q_diag_;
  double d_ = 0.0;
  bool kac_ = true;
};

/// A finite truncation of Irr(G). The first irrep is the trivial one.
class DualDescriptor {
 public:
  DualDescriptor(std::string name, std::vector<IrrepData> irreps);

  const std::string& name() const { return name_; }
  const std::vector<IrrepData>& irreps() const { return irreps_; }
  const IrrepData& irrep(std::size_t index) const { return irreps_.at(index); }
  std::size_t size() const { return irreps_.size(); }
  bool kac() const { return kac_; }

  /// Index of the irrep with the given label, if present.
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  bool operator==(const DualDescriptor& other) const {
    return name_ == other.name_ && irreps_ == other.irreps_;
  }

 private:
  std::string name_;
  std::vector<IrrepData> irreps_;
  bool kac_ = true;
};

using DualPtr = std::shared_ptr<const DualDescriptor>;

inline bool same_dual(const DualPtr& a, const DualPtr& b) {
  return a == b || (a && b && *a == *b);
}

DualPtr make_trivial_dual();
DualPtr make_su2_dual(int kmax);
/// Q_k = diag(q^{k}, q^{k-2}, ..., q^{-k}).
DualPtr make_suq2_dual(double q, int kmax);
/// Throws std::length_error when a dimension exceeds kMaxMaterializedDim.
DualPtr make_onplus_dual(int N, int kmax);

inline constexpr long long kMaxMaterializedDim = 4096;

/// Kac dual with the given classical dimensions; labels are "0", "1", ...
DualPtr make_kac_dual(std::string name, const std::vector<int>& dims);

inline double quantum_dimension(const IrrepData& irrep) { return irrep.d(); }

using BigInt = boost::multiprecision::cpp_int;

/// Exact O_N^+ dimensions n_0 = 1, n_1 = N, n_{k+1} = N n_k - n_{k-1}.
std::vector<BigInt> onplus_dimensions(int N, int kmax);

}  // namespace cqg
