#include "cqg/classical_eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_ellint.h>

#include "cqg/random_series.hpp"

namespace cqg {

namespace {

DualPtr dual_from_irreps(const std::string& name, const std::vector<FiniteGroupIrrep>& irreps) {
  std::vector<IrrepData> data;
  for (const auto& irrep : irreps) {
    data.emplace_back(irrep.label, std::vector<double>(static_cast<std::size_t>(irrep.n), 1.0));
  }
  return std::make_shared<const DualDescriptor>(name, std::move(data));
}

void require_classical(const FourierCoeffs& f, const HaarModel& model) {
  if (!model.dual->kac()) throw std::invalid_argument("classical evaluation needs a Kac dual");
  if (!same_dual(f.dual(), model.dual)) {
    throw std::invalid_argument("coefficients do not live on the Haar model's dual ('" +
                                f.dual()->name() + "' vs '" + model.dual->name() + "')");
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients (in powers of y) of (u + v y)^e.
std::vector<cd> linear_power(cd u, cd v, int e) {
  std::vector<cd> out(static_cast<std::size_t>(e + 1));
  std::vector<cd> upow(static_cast<std::size_t>(e + 1), 1.0);
  std::vector<cd> vpow(static_cast<std::size_t>(e + 1), 1.0);
  for (int r = 1; r <= e; ++r) {
    upow[r] = upow[r - 1] * u;
    vpow[r] = vpow[r - 1] * v;
  }
  for (int r = 0; r <= e; ++r) out[r] = binomial(e, r) * upow[e - r] * vpow[r];
  return out;
}

struct GslTableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

struct GslWorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

double schur_defect(const std::vector<MatrixC>& mats, const std::vector<double>& weights, int n) {
  // max |sum_x w_x u_{i,j}(x) conj(u_{s,t}(x)) - delta / n| over all index quadruples
  const int nn = n * n;
  MatrixC gram = MatrixC::Zero(nn, nn);
  VectorC v(nn);
  for (std::size_t x = 0; x < mats.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v(i * n + j) = mats[x](i, j);
    }
    gram.noalias() += weights[x] * v * v.adjoint();
  }
  gram -= MatrixC::Identity(nn, nn) / static_cast<double>(n);
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> mult,
                                   std::vector<FiniteGroupIrrep> irreps)
    : name_(std::move(name)), mult_(std::move(mult)), irreps_(std::move(irreps)) {
  const int order = static_cast<int>(mult_.size());
  if (order < 1) throw std::invalid_argument(name_ + ": empty multiplication table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != order) {
      throw std::invalid_argument(name_ + ": multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= order) throw std::invalid_argument(name_ + ": table entry out of range");
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) {
          throw std::invalid_argument(name_ + ": multiplication is not associative");
        }
      }
    }
  }
  identity_ = -1;
  for (int e = 0; e < order && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order && ok; ++g) ok = mult_[e][g] == g && mult_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument(name_ + ": no identity element");
  inverse_.assign(static_cast<std::size_t>(order), -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (mult_[g][h] == identity_ && mult_[h][g] == identity_) inverse_[g] = h;
    }
    if (inverse_[g] < 0) throw std::invalid_argument(name_ + ": element without inverse");
  }

  if (irreps_.empty()) throw std::invalid_argument(name_ + ": no irreps");
  int sum_sq = 0;
  for (const auto& irrep : irreps_) {
    if (static_cast<int>(irrep.matrices.size()) != order) {
      throw std::invalid_argument(name_ + ": irrep '" + irrep.label + "' needs one matrix per element");
    }
    for (const auto& m : irrep.matrices) {
      if (m.rows() != irrep.n || m.cols() != irrep.n) {
        throw std::invalid_argument(name_ + ": irrep '" + irrep.label + "' has a wrongly sized matrix");
      }
      if (unitarity_defect(m) > kExactGroupTolerance) {
        throw std::invalid_argument(name_ + ": irrep '" + irrep.label + "' is not unitary");
      }
    }
    for (int g = 0; g < order; ++g) {
      for (int h = 0; h < order; ++h) {
        const MatrixC diff = irrep.matrices[mult_[g][h]] - irrep.matrices[g] * irrep.matrices[h];
        if (diff.cwiseAbs().maxCoeff() > kExactGroupTolerance) {
          throw std::invalid_argument(name_ + ": irrep '" + irrep.label + "' is not a homomorphism");
        }
      }
    }
    sum_sq += irrep.n * irrep.n;
  }
  if (sum_sq != order) throw std::invalid_argument(name_ + ": sum of n^2 differs from |G|");

  // Schur relations with Q = I, including cross-irrep orthogonality.
  const double w = 1.0 / order;
  for (std::size_t a = 0; a < irreps_.size(); ++a) {
    for (std::size_t b = 0; b < irreps_.size(); ++b) {
      const auto& ra = irreps_[a];
      const auto& rb = irreps_[b];
      for (int i = 0; i < ra.n; ++i) {
        for (int j = 0; j < ra.n; ++j) {
          for (int s = 0; s < rb.n; ++s) {
            for (int t = 0; t < rb.n; ++t) {
              cd h = 0.0;
              for (int g = 0; g < order; ++g) {
                h += w * std::conj(rb.matrices[g](s, t)) * ra.matrices[g](i, j);
              }
              const double expected = (a == b && i == s && j == t) ? 1.0 / ra.n : 0.0;
              if (std::abs(h - expected) > kExactGroupTolerance) {
                throw std::invalid_argument(name_ + ": Schur orthogonality fails");
              }
            }
          }
        }
      }
    }
  }
  dual_ = dual_from_irreps(name_, irreps_);
}

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  }
  std::vector<FiniteGroupIrrep> irreps;
  for (int k = 0; k < n; ++k) {
    FiniteGroupIrrep irrep{"chi" + std::to_string(k), 1, {}};
    for (int m = 0; m < n; ++m) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * m) % n) / n;
      irrep.matrices.push_back(MatrixC::Constant(1, 1, std::polar(1.0, angle)));
    }
    irreps.push_back(std::move(irrep));
  }
  return FiniteGroupTable("z" + std::to_string(n), std::move(mult), std::move(irreps));
}

FiniteGroupTable symmetric_group_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(order), std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mult[a][b] = index_of(c);
    }
  }
  MatrixR basis(3, 2);
  basis << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
          -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
          0.0, -2.0 / std::sqrt(6.0);
  FiniteGroupIrrep trivial{"trivial", 1, {}};
  FiniteGroupIrrep sign{"sign", 1, {}};
  FiniteGroupIrrep standard{"standard", 2, {}};
  for (const auto& perm : perms) {
    MatrixR pm = MatrixR::Zero(3, 3);
    for (int x = 0; x < 3; ++x) pm(perm[x], x) = 1.0;
    trivial.matrices.push_back(MatrixC::Ones(1, 1));
    sign.matrices.push_back(MatrixC::Constant(1, 1, pm.determinant()));
    standard.matrices.push_back((basis.transpose() * pm * basis).cast<cd>());
  }
  return FiniteGroupTable("s3", std::move(mult), {trivial, sign, standard});
}

HaarModel HaarModel::from_table(const FiniteGroupTable& table) {
  HaarModel model;
  model.dual = table.dual();
  const int order = table.order();
  model.weights.assign(static_cast<std::size_t>(order), 1.0 / order);
  model.reps.resize(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    for (const auto& irrep : table.irreps()) model.reps[g].push_back(irrep.matrices[g]);
  }
  return model;
}

MatrixC su2_element(double theta, double phi, double psi) {
  const cd a = std::polar(std::cos(theta / 2.0), phi);
  const cd b = std::polar(std::sin(theta / 2.0), psi);
  MatrixC g(2, 2);
  g << a, -std::conj(b), b, std::conj(a);
  return g;
}

MatrixC su2_irrep_matrix(int k, const MatrixC& g) {
  if (k < 0) throw std::invalid_argument("su2_irrep_matrix: k must be >= 0");
  if (g.rows() != 2 || g.cols() != 2 || unitarity_defect(g) > 1e-10 ||
      std::abs(g.determinant() - cd(1.0)) > 1e-10) {
    throw std::invalid_argument("su2_irrep_matrix: g must be special unitary");
  }
  const cd a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  MatrixC out(k + 1, k + 1);
  for (int m = 0; m <= k; ++m) {
    // x^{k-m} y^m  ->  (a x + c y)^{k-m} (b x + d y)^m
    const auto p1 = linear_power(a, c, k - m);
    const auto p2 = linear_power(b, d, m);
    std::vector<cd> prod(static_cast<std::size_t>(k + 1), 0.0);
    for (std::size_t r = 0; r < p1.size(); ++r) {
      for (std::size_t s = 0; s < p2.size(); ++s) prod[r + s] += p1[r] * p2[s];
    }
    for (int l = 0; l <= k; ++l) {
      out(l, m) = prod[l] * std::sqrt(binomial(k, m) / binomial(k, l));
    }
  }
  return out;
}

SU2Quadrature::SU2Quadrature(int resolution) : resolution_(resolution) {
  if (resolution < 4) throw std::invalid_argument("SU2Quadrature: resolution must be >= 4");
  std::unique_ptr<gsl_integration_glfixed_table, GslTableDeleter> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(resolution)));
  const int nphase = 2 * resolution;
  const double phase_weight = 1.0 / (static_cast<double>(nphase) * nphase);
  for (int t = 0; t < resolution; ++t) {
    double x = 0.0, w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(t), &x, &w, table.get());
    const double theta = std::acos(x);
    for (int p = 0; p < nphase; ++p) {
      for (int s = 0; s < nphase; ++s) {
        nodes_.push_back(su2_element(theta, 2.0 * std::numbers::pi * p / nphase,
                                     2.0 * std::numbers::pi * s / nphase));
        weights_.push_back(0.5 * w * phase_weight);
      }
    }
  }
  // probe past resolution-1 for the actual cutoff
  for (int k = 0; k <= resolution + 1; ++k) {
    std::vector<MatrixC> mats;
    mats.reserve(nodes_.size());
    for (const auto& g : nodes_) mats.push_back(su2_irrep_matrix(k, g));
    if (schur_defect(mats, weights_, k + 1) > kQuadratureSchurTolerance) break;
    kmax_valid_ = k;
  }
}

HaarModel SU2Quadrature::model(int kmax) const {
  if (kmax > kmax_valid_) {
    throw std::invalid_argument("SU2Quadrature: kmax " + std::to_string(kmax) +
                                " exceeds the validated degree " + std::to_string(kmax_valid_));
  }
  HaarModel m;
  m.dual = make_su2_dual(kmax);
  m.weights = weights_;
  m.reps.resize(nodes_.size());
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    for (int k = 0; k <= kmax; ++k) m.reps[x].push_back(su2_irrep_matrix(k, nodes_[x]));
  }
  return m;
}

SU2Quadrature make_su2_quadrature(int resolution) { return SU2Quadrature(resolution); }

cd evaluate(const FourierCoeffs& f, const HaarModel& model, std::size_t node) {
  require_classical(f, model);
  cd value = 0.0;
  for (const auto& [idx, fhat] : f.support()) {
    const auto& rep = model.reps.at(node)[idx];
    value += static_cast<double>(rep.rows()) * (fhat * rep).trace();
  }
  return value;
}

std::vector<cd> evaluate_all(const FourierCoeffs& f, const HaarModel& model) {
  std::vector<cd> values(model.num_nodes());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = evaluate(f, model, x);
  return values;
}

cd evaluate_su2(const FourierCoeffs& f, const MatrixC& g) {
  if (!f.dual()->kac()) throw std::invalid_argument("evaluate_su2 needs a Kac dual");
  cd value = 0.0;
  for (const auto& [idx, fhat] : f.support()) {
    const int k = static_cast<int>(fhat.rows()) - 1;
    value += static_cast<double>(k + 1) * (fhat * su2_irrep_matrix(k, g)).trace();
  }
  return value;
}

FourierCoeffs extract_coefficients(const std::vector<cd>& values, const HaarModel& model) {
  if (values.size() != model.num_nodes()) {
    throw std::invalid_argument("extract_coefficients: one value per node required");
  }
  FourierCoeffs out(model.dual);
  for (std::size_t idx = 0; idx < model.dual->size(); ++idx) {
    const int n = model.dual->irrep(idx).n();
    MatrixC acc = MatrixC::Zero(n, n);
    for (std::size_t x = 0; x < values.size(); ++x) {
      acc += model.weights[x] * values[x] * model.reps[x][idx].adjoint();
    }
    out.set(idx, std::move(acc));
  }
  return out;
}

double l1_norm_classical(const FourierCoeffs& f, const HaarModel& model) {
  const auto values = evaluate_all(f, model);
  double total = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) total += model.weights[x] * std::abs(values[x]);
  return total;
}

double linfty_norm_classical(const FourierCoeffs& f, const HaarModel& model) {
  double sup = 0.0;
  for (const auto& v : evaluate_all(f, model)) sup = std::max(sup, std::abs(v));
  return sup;
}

double l2_norm_classical(const FourierCoeffs& f, const HaarModel& model) {
  const auto values = evaluate_all(f, model);
  double total = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) total += model.weights[x] * std::norm(values[x]);
  return std::sqrt(total);
}

HelgasonGaussian helgason_gaussian_mean(const FourierCoeffs& f, int trials, Rng& rng,
                                        const HaarModel& model) {
  require_classical(f, model);
  if (trials < 2) throw std::invalid_argument("helgason_gaussian_mean: trials must be >= 2");
  HelgasonGaussian out;
  double variance = 0.0;
  for (const auto& [idx, fhat] : f.support()) {
    variance += static_cast<double>(fhat.rows()) * fhat.squaredNorm();
  }
  out.predicted = std::sqrt(2.0 / std::numbers::pi) * std::sqrt(variance);

  // (f^ pi(x)) per node and irrep, reused across trials
  std::vector<std::vector<MatrixC>> fpi(model.num_nodes());
  out.real_direction = true;
  for (std::size_t x = 0; x < model.num_nodes(); ++x) {
    double rr = 0.0, ii = 0.0, ri = 0.0;
    for (const auto& [idx, fhat] : f.support()) {
      fpi[x].push_back(fhat * model.reps[x][idx]);
      const double n = static_cast<double>(fhat.rows());
      const MatrixC& m = fpi[x].back();
      rr += n * m.real().squaredNorm();
      ii += n * m.imag().squaredNorm();
      ri += n * m.real().cwiseProduct(m.imag()).sum();
    }
    const double half_tr = 0.5 * (rr + ii);
    const double disc = std::sqrt(0.25 * (rr - ii) * (rr - ii) + ri * ri);
    const double l1 = half_tr + disc;
    const double l2 = std::max(0.0, half_tr - disc);
    if (l1 <= 0.0) continue;
    const double m = 1.0 - l2 / l1;
    if (l2 > 1e-24 * l1) out.real_direction = false;
    const double ecomp = m >= 1.0 ? 1.0 : gsl_sf_ellint_Ecomp(std::sqrt(m), GSL_PREC_DOUBLE);
    out.exact += model.weights[x] * std::sqrt(2.0 / std::numbers::pi) * std::sqrt(l1) * ecomp;
  }
  double sum = 0.0, sum_sq = 0.0;
  std::vector<MatrixR> g;
  for (int t = 0; t < trials; ++t) {
    g.clear();
    for (const auto& [idx, fhat] : f.support()) {
      const int n = static_cast<int>(fhat.rows());
      MatrixR gm(n, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) gm(i, j) = rng.normal() * std::sqrt(static_cast<double>(n));
      }
      g.push_back(std::move(gm));
    }
    double value = 0.0;
    for (std::size_t x = 0; x < model.num_nodes(); ++x) {
      cd s = 0.0;
      for (std::size_t a = 0; a < g.size(); ++a) {
        // sum_{i,j} g_{i,j} M_{j,i} = sum of g .* M^T
        s += (g[a].cast<cd>().cwiseProduct(fpi[x][a].transpose())).sum();
      }
      value += model.weights[x] * std::abs(s);
    }
    sum += value;
    sum_sq += value * value;
  }
  out.mean = sum / trials;
  const double var = std::max(0.0, (sum_sq - trials * out.mean * out.mean) / (trials - 1));
  out.std_error = std::sqrt(var / trials);
  return out;
}

Lemma35Result lemma35_check(const MatrixC& m, std::size_t irrep_index, int i, int j,
                            const HaarModel& model, Lemma35Side side) {
  if (!model.dual->kac()) throw std::invalid_argument("lemma35_check needs a classical dual");
  const auto& irrep = model.dual->irrep(irrep_index);
  const int n = irrep.n();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("lemma35_check: wrong shape");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("lemma35_check: index");

  Lemma35Result out;
  if (side == Lemma35Side::upper) {
    double row = 0.0;
    for (int k = 0; k < n; ++k) row += std::norm(m(i, k) / std::sqrt(irrep.q(k)));
    out.bound = std::sqrt(irrep.q(j)) * std::sqrt(row);
    for (std::size_t x = 0; x < model.num_nodes(); ++x) {
      const MatrixC& u = model.reps[x][irrep_index];
      cd v = 0.0;
      for (int k = 0; k < n; ++k) v += m(i, k) * std::conj(u(k, j));
      out.actual = std::max(out.actual, std::abs(v));
    }
    out.margin = out.bound - out.actual;
  } else {
    double row = 0.0;
    for (int k = 0; k < n; ++k) row += std::norm(m(i, k) * std::sqrt(irrep.q(k)));
    out.bound = std::sqrt(row) / (std::sqrt(irrep.q(j)) * irrep.d());
    for (std::size_t x = 0; x < model.num_nodes(); ++x) {
      const MatrixC& u = model.reps[x][irrep_index];
      cd v = 0.0;
      for (int k = 0; k < n; ++k) v += m(i, k) * irrep.q(k) * u(k, j);
      out.actual += model.weights[x] * std::abs(v);
    }
    out.margin = out.actual - out.bound;
  }
  return out;
}

double character_l1(int k) {
  if (k < 0) throw std::invalid_argument("character_l1: k must be >= 0");
  gsl_set_error_handler_off();
  std::unique_ptr<gsl_integration_workspace, GslWorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(256));
  struct Params {
    int k;
  } params{k};
  gsl_function fn;
  fn.function = [](double t, void* p) {
    const int kk = static_cast<Params*>(p)->k;
    return std::sin((kk + 1) * t) * std::sin(t);
  };
  fn.params = &params;
  // sin((k+1)t) keeps its sign on every lobe [m, m+1] pi / (k+1).
  double total = 0.0;
  const double step = std::numbers::pi / (k + 1);
  for (int m = 0; m <= k; ++m) {
    double result = 0.0, abserr = 0.0;
    const int status = gsl_integration_qag(&fn, m * step, (m + 1) * step, 1e-15, 1e-13, 256,
                                           GSL_INTEG_GAUSS21, ws.get(), &result, &abserr);
    if (status != GSL_SUCCESS && abserr > 1e-12) {
      throw std::runtime_error(std::string("character_l1: integration failed: ") +
                               gsl_strerror(status));
    }
    total += std::abs(result);
  }
  return 2.0 / std::numbers::pi * total;
}

Cotype2Estimate cotype2_ratio(const std::vector<FourierCoeffs>& xs, int trials, Rng& rng,
                              const HaarModel& model) {
  if (xs.empty()) throw std::invalid_argument("cotype2_ratio: empty family");
  if (trials < 2) throw std::invalid_argument("cotype2_ratio: trials must be >= 2");
  std::vector<std::vector<cd>> values;
  double denom_sq = 0.0;
  for (const auto& x : xs) {
    values.push_back(evaluate_all(x, model));
    const double l1 = l1_norm_classical(x, model);
    denom_sq += l1 * l1;
  }
  if (!(denom_sq > 0.0)) throw std::invalid_argument("cotype2_ratio: all elements are zero");
  const double denom = std::sqrt(denom_sq);

  std::vector<double> g(xs.size());
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    for (auto& v : g) v = rng.normal();
    double norm = 0.0;
    for (std::size_t x = 0; x < model.num_nodes(); ++x) {
      cd s = 0.0;
      for (std::size_t j = 0; j < xs.size(); ++j) s += g[j] * values[j][x];
      norm += model.weights[x] * std::abs(s);
    }
    sum += norm;
    sum_sq += norm * norm;
  }
  const double mean = sum / trials;
  const double var = std::max(0.0, (sum_sq - trials * mean * mean) / (trials - 1));
  return {mean / denom, std::sqrt(var / trials) / denom};
}

HelgasonInstance helgason_instance_report(const FourierCoeffs& f, int num_unitaries, Rng& rng,
                                          const HaarModel& model) {
  require_classical(f, model);
  if (num_unitaries < 1) throw std::invalid_argument("helgason_instance_report: need >= 1 unitary");
  HelgasonInstance out;
  out.ell2 = ell2_norm(f);
  for (int t = 0; t < num_unitaries; ++t) {
    const MatrixFamily u = MatrixFamily::haar(f.dual(), rng);
    out.sup_l1_over_u = std::max(out.sup_l1_over_u, l1_norm_classical(randomize(f, u), model));
  }
  out.ratio = out.ell2 > 0.0 ? out.sup_l1_over_u / out.ell2 : 0.0;
  return out;
}

}  // namespace cqg
