#include "cqg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "cqg/classical_eval.hpp"
#include "cqg/fourier_core.hpp"
#include "cqg/l2_operators.hpp"
#include "cqg/quantum_examples.hpp"
#include "cqg/random_series.hpp"

namespace cqg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

struct Defaults {
  std::optional<int> trials;
  std::optional<int> cases;
  std::optional<int> kmax;
  std::optional<double> eps;
};

struct Context {
  const ExperimentConfig& cfg;
  ExperimentOutput& out;
  Rng rng;
  std::uint64_t seed = 0;
  int trials = 0;
  int cases = 0;
  int kmax = 0;
  double eps = 0.0;
  Clock::time_point last = Clock::now();

  void emit(Json body, bool ok) {
    Json rec;
    rec["version"] = kToolkitVersion;
    rec["subcommand"] = out.name;
    rec["config"] = out.config;
    rec["seed"] = seed;
    for (auto& [k, v] : body.items()) rec[k] = v;
    rec["pass"] = ok;
    rec["elapsed_ms"] = ms_since(last);
    last = Clock::now();
    if (!ok) out.failures.push_back(out.name + ": " + body.dump());
    out.records.push_back(std::move(rec));
  }
};

struct NamedDual {
  std::string tag;
  DualPtr dual;
};

// Desk-scale sweep: kmax <= 6, n <= 12.
std::vector<NamedDual> builtin_sweep(double q) {
  return {{"trivial", make_trivial_dual()},
          {"z8", cyclic_group(8).dual()},
          {"s3", symmetric_group_s3().dual()},
          {"su2", make_su2_dual(6)},
          {"suq2", make_suq2_dual(q, 6)},
          {"o3plus", make_onplus_dual(3, 2)}};
}

std::vector<NamedDual> duals_for(const Context& ctx) {
  if (!ctx.cfg.dual) return builtin_sweep(ctx.cfg.q);
  ExperimentConfig c = ctx.cfg;
  c.kmax = ctx.kmax;
  DualPtr d = make_named_dual(*ctx.cfg.dual, c);
  return {{d->name(), d}};
}

double max_entry_gap(const FourierCoeffs& a, const FourierCoeffs& b) {
  double gap = 0.0;
  for (std::size_t idx = 0; idx < a.dual()->size(); ++idx) {
    if (!a.contains(idx) && !b.contains(idx)) continue;
    gap = std::max(gap, (a.at(idx) - b.at(idx)).cwiseAbs().maxCoeff());
  }
  return gap;
}

// ---------------------------------------------------------------- dual side

void run_plancherel(Context& ctx) {
  double worst = 0.0;
  int total = 0;
  for (const auto& [tag, dual] : duals_for(ctx)) {
    for (int c = 0; c < ctx.cases; ++c) {
      const FourierCoeffs f = random_coeffs(dual, ctx.rng);
      const double l2 = ell2_norm(f);
      const double gram = plancherel_gram_norm(f);
      const double rel = std::abs(gram - l2) / l2;
      worst = std::max(worst, rel);
      ++total;
      ctx.emit({{"dual", tag}, {"case", c}, {"ell2", l2}, {"gram", gram}, {"rel_dev", rel}},
               rel <= 1e-12);
    }
  }
  ctx.out.summary = std::to_string(total) + " families, max rel deviation " + sci(worst);
}

void run_pairing(Context& ctx) {
  double worst_norm = 0.0;
  double worst_sym = 0.0;
  for (const auto& [tag, dual] : duals_for(ctx)) {
    for (int c = 0; c < ctx.cases; ++c) {
      const FourierCoeffs mu = random_coeffs(dual, ctx.rng);
      const FourierCoeffs f = random_coeffs(dual, ctx.rng);
      const double l2 = ell2_norm(f);
      const double norm_dev = std::abs(pairing(f, f) - l2 * l2) / (l2 * l2);
      const double scale = ell2_norm(mu) * l2;
      const double sym_dev = std::abs(pairing(mu, f) - std::conj(pairing(f, mu))) / scale;
      worst_norm = std::max(worst_norm, norm_dev);
      worst_sym = std::max(worst_sym, sym_dev);
      ctx.emit({{"dual", tag},
                {"case", c},
                {"self_pairing_rel_dev", norm_dev},
                {"hermitian_rel_dev", sym_dev}},
               norm_dev <= 1e-12 && sym_dev <= 1e-12);
    }
  }
  ctx.out.summary = "max <f,f> vs ell2^2 " + sci(worst_norm) + ", max hermitian defect " +
                    sci(worst_sym);
}

void run_convolve_check(Context& ctx) {
  const FiniteGroupTable s3 = symmetric_group_s3();
  const HaarModel model = HaarModel::from_table(s3);
  const DualPtr& dual = s3.dual();
  const int order = s3.order();
  double worst_brute = 0.0;
  double worst_assoc = 0.0;
  double worst_unit = 0.0;
  const FourierCoeffs unit = convolution_unit(dual);
  for (int c = 0; c < ctx.cases; ++c) {
    const FourierCoeffs f1 = random_coeffs(dual, ctx.rng);
    const FourierCoeffs f2 = random_coeffs(dual, ctx.rng);
    const FourierCoeffs f3 = random_coeffs(dual, ctx.rng);
    const auto v1 = evaluate_all(f1, model);
    const auto v2 = evaluate_all(f2, model);
    std::vector<cd> conv(static_cast<std::size_t>(order), 0.0);
    for (int g = 0; g < order; ++g) {
      for (int h = 0; h < order; ++h) {
        conv[g] += v1[h] * v2[s3.multiply(s3.inverse(h), g)];
      }
      conv[g] /= static_cast<double>(order);
    }
    const double brute = max_entry_gap(extract_coefficients(conv, model), convolve(f1, f2));
    const double assoc =
        max_entry_gap(convolve(convolve(f1, f2), f3), convolve(f1, convolve(f2, f3)));
    const double unit_dev = std::max(max_entry_gap(convolve(f1, unit), f1),
                                     max_entry_gap(convolve(unit, f1), f1));
    worst_brute = std::max(worst_brute, brute);
    worst_assoc = std::max(worst_assoc, assoc);
    worst_unit = std::max(worst_unit, unit_dev);
    ctx.emit({{"group", "s3"},
              {"case", c},
              {"brute_force_dev", brute},
              {"associativity_dev", assoc},
              {"unit_dev", unit_dev}},
             brute <= 1e-12 && assoc <= 1e-12 && unit_dev <= 1e-12);
  }
  ctx.out.summary = "S_3 brute force " + sci(worst_brute) + ", associativity " +
                    sci(worst_assoc) + ", unit " + sci(worst_unit);
}

// ------------------------------------------------------------ randomization

void run_randomize_l2(Context& ctx) {
  double worst = 0.0;
  for (const auto& [tag, dual] : duals_for(ctx)) {
    for (int c = 0; c < ctx.cases; ++c) {
      const FourierCoeffs f = random_coeffs(dual, ctx.rng);
      const MatrixFamily u = MatrixFamily::haar(dual, ctx.rng);
      const double rel = l2_invariance_check(f, u) / ell2_norm(f);
      worst = std::max(worst, rel);
      ctx.emit({{"dual", tag}, {"case", c}, {"rel_dev", rel}}, rel <= 1e-10);
    }
  }
  ctx.out.summary = "max relative L2 deviation " + sci(worst);
}

void run_four_unitary(Context& ctx) {
  constexpr int kMaxN = 16;
  std::map<int, std::pair<int, std::pair<double, double>>> per_n;
  for (int c = 0; c < ctx.cases; ++c) {
    const int n = 1 + c % kMaxN;
    MatrixC x = random_contraction(n, ctx.rng);
    // every tenth case sits on the unit sphere
    if (c % 10 == 9) x /= spectral_norm(x);
    const auto v = four_unitary_decomposition(x);
    const double recon = spectral_norm(MatrixC((v[0] + v[1] + v[2] + v[3]) / 2.0 - x));
    double unit = 0.0;
    for (const auto& m : v) unit = std::max(unit, unitarity_defect(m));
    auto& slot = per_n[n];
    slot.first += 1;
    slot.second.first = std::max(slot.second.first, recon);
    slot.second.second = std::max(slot.second.second, unit);
  }
  double worst = 0.0;
  for (const auto& [n, s] : per_n) {
    const auto [recon, unit] = s.second;
    worst = std::max({worst, recon, unit});
    ctx.emit({{"n", n},
              {"cases", s.first},
              {"max_reconstruction_defect", recon},
              {"max_unitarity_defect", unit}},
             recon <= 1e-9 && unit <= 1e-9);
  }
  ctx.out.summary =
      std::to_string(ctx.cases) + " contractions, n <= 16, worst defect " + sci(worst);
}

void run_ball_decomposition(Context& ctx) {
  double worst = 0.0;
  for (const auto& [tag, dual] : duals_for(ctx)) {
    const auto check = [&](const std::string& kind, int c, const MatrixFamily& b) {
      const FourierCoeffs f = random_coeffs(dual, ctx.rng);
      const BallRandomization r = randomize_ball(f, b);
      worst = std::max(worst, r.deviation);
      ctx.emit({{"dual", tag}, {"kind", kind}, {"case", c}, {"deviation", r.deviation}},
               r.deviation <= 1e-9);
    };
    check("zero", 0, MatrixFamily::scalar(dual, 0.0));
    check("half_identity", 0, MatrixFamily::scalar(dual, 0.5));
    for (int c = 0; c < ctx.cases; ++c) check("random", c, random_ball_family(dual, ctx.rng));
  }
  ctx.out.summary = "max |f_B - sum f_Vj / 2| " + sci(worst);
}

// ------------------------------------------------------------- Monte Carlo

void run_gaussian_norms(Context& ctx) {
  if (ctx.cfg.nmax < 1) throw std::invalid_argument("--nmax must be >= 1");
  const double half_normal = std::sqrt(2.0 / std::numbers::pi);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int n = 1; n <= ctx.cfg.nmax; n *= 2) {
    const MonteCarloEstimate e = expected_operator_norm(n, ctx.trials, ctx.rng);
    bool ok;
    Json body = {{"n", n}, {"trials", ctx.trials}, {"mean", e.mean}, {"std_error", e.std_error}};
    if (n == 1) {
      body["expected"] = half_normal;
      ok = std::abs(e.mean - half_normal) <= 3.0 * e.std_error;
    } else {
      lo = std::min(lo, e.mean);
      hi = std::max(hi, e.mean);
      body["band"] = {1.2, 2.6};
      ok = e.mean >= 1.2 && e.mean <= 2.6;
    }
    ctx.emit(std::move(body), ok);
  }
  ctx.out.summary = hi > 0.0 ? "means for n >= 2 in [" + fixed(lo) + ", " + fixed(hi) + "]"
                             : "n = 1 only";
}

// Random support (each irrep with probability 1/2, never empty) and random size.
FourierCoeffs random_sparse_coeffs(const DualPtr& dual, Rng& rng) {
  FourierCoeffs f(dual);
  while (f.empty()) {
    for (std::size_t idx = 0; idx < dual->size(); ++idx) {
      if (rng.uniform() < 0.5) {
        const double scale = 0.1 + 2.0 * rng.uniform();
        f.set(idx, ginibre_matrix(dual->irrep(idx).n(), rng) * scale);
      }
    }
  }
  return f;
}

void run_helgason_gaussian(Context& ctx) {
  const FiniteGroupTable z8 = cyclic_group(8);
  const FiniteGroupTable s3 = symmetric_group_s3();
  const HaarModel models[2] = {HaarModel::from_table(z8), HaarModel::from_table(s3)};
  const char* names[2] = {"z8", "s3"};
  double worst_sigma = 0.0;
  int real_cases = 0;
  for (int c = 0; c < ctx.cases; ++c) {
    const HaarModel& model = models[c % 2];
    FourierCoeffs f = random_sparse_coeffs(model.dual, ctx.rng);
    // S_3 irreps are real orthogonal; real coefficients give a real integrand
    if (c % 2 == 1) {
      FourierCoeffs real(model.dual);
      for (const auto& [idx, m] : f.support()) real.set(idx, MatrixC(m.real().cast<cd>()));
      f = real;
    }
    const HelgasonGaussian h = helgason_gaussian_mean(f, ctx.trials, ctx.rng, model);
    const double sigmas = std::abs(h.mean - h.exact) / h.std_error;
    const double predicted_sigmas = (h.mean - h.predicted) / h.std_error;
    worst_sigma = std::max(worst_sigma, sigmas);
    bool ok = sigmas <= 3.0 && predicted_sigmas >= -3.0;
    if (h.real_direction) {
      ++real_cases;
      ok = ok && std::abs(predicted_sigmas) <= 3.0;
    }
    ctx.emit({{"group", names[c % 2]},
              {"case", c},
              {"support", f.support().size()},
              {"real_direction", h.real_direction},
              {"mean", h.mean},
              {"std_error", h.std_error},
              {"exact", h.exact},
              {"predicted", h.predicted},
              {"sigmas_from_exact", sigmas},
              {"sigmas_above_predicted", predicted_sigmas}},
             ok);
  }
  ctx.out.summary = std::to_string(ctx.cases) + " cases (" + std::to_string(real_cases) +
                    " real-direction), worst |mean - exact| = " + fixed(worst_sigma, 2) +
                    " stderr";
}

void run_helgason_instance(Context& ctx) {
  // |c| on the trivial irrep
  {
    const FiniteGroupTable z1 = cyclic_group(1);
    const HaarModel model = HaarModel::from_table(z1);
    FourierCoeffs f(model.dual);
    const cd c(0.6, -0.8);
    f.set(std::size_t{0}, MatrixC::Constant(1, 1, c));
    const HelgasonInstance r = helgason_instance_report(f, ctx.trials, ctx.rng, model);
    const bool ok = std::abs(r.sup_l1_over_u - std::abs(c)) <= 1e-12 &&
                    std::abs(r.ell2 - std::abs(c)) <= 1e-12 && std::abs(r.ratio - 1.0) <= 1e-12;
    ctx.emit({{"instance", "trivial"},
              {"unitaries", ctx.trials},
              {"sup_l1_over_u", r.sup_l1_over_u},
              {"ell2", r.ell2},
              {"ratio", r.ratio}},
             ok);
  }
  // sign character of Z_2: |f_U| = 1 everywhere
  {
    const FiniteGroupTable z2 = cyclic_group(2);
    const HaarModel model = HaarModel::from_table(z2);
    FourierCoeffs f(model.dual);
    f.set(std::size_t{1}, MatrixC::Identity(1, 1));
    const HelgasonInstance r = helgason_instance_report(f, ctx.trials, ctx.rng, model);
    const bool ok =
        std::abs(r.sup_l1_over_u - 1.0) <= 1e-12 && std::abs(r.ell2 - 1.0) <= 1e-12;
    ctx.emit({{"instance", "z2_sign"},
              {"unitaries", ctx.trials},
              {"sup_l1_over_u", r.sup_l1_over_u},
              {"ell2", r.ell2},
              {"ratio", r.ratio}},
             ok);
  }
  // random f on S_3: stability of the sampled sup under 10x more unitaries
  const FiniteGroupTable s3 = symmetric_group_s3();
  const HaarModel model = HaarModel::from_table(s3);
  const FourierCoeffs f = random_coeffs(model.dual, ctx.rng);
  const HelgasonInstance small = helgason_instance_report(f, ctx.trials, ctx.rng, model);
  const HelgasonInstance large = helgason_instance_report(f, 10 * ctx.trials, ctx.rng, model);
  const double drift = std::abs(large.ratio - small.ratio) / large.ratio;
  ctx.emit({{"instance", "s3_random"},
            {"unitaries", ctx.trials},
            {"sup_l1_over_u", small.sup_l1_over_u},
            {"ell2", small.ell2},
            {"ratio", small.ratio},
            {"unitaries_10x", 10 * ctx.trials},
            {"ratio_10x", large.ratio},
            {"relative_drift", drift}},
           drift <= 0.1 && large.ratio <= 1.0 + 1e-12);
  ctx.out.summary = "S_3 ratio " + fixed(small.ratio) + " -> " + fixed(large.ratio) +
                    " at 10x unitaries (drift " + sci(drift) + ")";
}

void run_lemma35(Context& ctx) {
  const SU2Quadrature quad(ctx.cfg.resolution);
  const HaarModel model = quad.model(ctx.kmax);
  double worst = std::numeric_limits<double>::infinity();
  const Lemma35Side sides[2] = {Lemma35Side::upper, Lemma35Side::lower};
  const char* side_names[2] = {"upper", "lower"};
  for (int s = 0; s < 2; ++s) {
    for (int c = 0; c < ctx.cases; ++c) {
      const auto k = static_cast<std::size_t>(ctx.rng.uniform() * (ctx.kmax + 1));
      const int n = model.dual->irrep(k).n();
      const int i = static_cast<int>(ctx.rng.uniform() * n);
      const int j = static_cast<int>(ctx.rng.uniform() * n);
      const MatrixC m = ginibre_matrix(n, ctx.rng);
      const Lemma35Result r = lemma35_check(m, k, i, j, model, sides[s]);
      worst = std::min(worst, r.margin);
      ctx.emit({{"side", side_names[s]},
                {"case", c},
                {"k", k},
                {"i", i},
                {"j", j},
                {"bound", r.bound},
                {"actual", r.actual},
                {"margin", r.margin}},
               r.margin >= -kQuadratureMarginAllowance);
    }
  }
  ctx.out.summary = "SU(2) k <= " + std::to_string(ctx.kmax) + ", min margin " + sci(worst);
}

// ------------------------------------------------------------ L2 operators

void run_tb_contraction(Context& ctx) {
  const int k_su2 = ctx.cfg.kmax.value_or(6);
  const int k_suq2 = ctx.cfg.kmax.value_or(8);
  const NamedDual duals[2] = {{"su2", make_su2_dual(k_su2)},
                              {"suq2", make_suq2_dual(ctx.cfg.q, k_suq2)}};
  double worst = 0.0;
  for (const auto& [tag, dual] : duals) {
    for (std::size_t k = 0; k < dual->size(); ++k) {
      const IrrepData& irrep = dual->irrep(k);
      double max_tb = 0.0;
      double max_gap = 0.0;
      for (int c = 0; c < ctx.cases; ++c) {
        const MatrixC b = random_contraction(irrep.n(), ctx.rng);
        const double tb = tb_block_norm(b, irrep);
        max_tb = std::max(max_tb, tb);
        max_gap = std::max(max_gap, std::abs(tb - spectral_norm(b)));
      }
      worst = std::max(worst, max_tb);
      ctx.emit({{"dual", tag},
                {"k", k},
                {"n", irrep.n()},
                {"multipliers", ctx.cases},
                {"max_tb_norm", max_tb},
                {"max_gap_to_norm_b", max_gap}},
               max_tb <= 1.0 + 1e-9);
    }
  }
  ctx.out.summary = "max ||T_B|| " + fixed(worst, 12);
}

void run_hx_identity(Context& ctx) {
  const DualPtr dual = make_suq2_dual(ctx.cfg.q, ctx.kmax);
  double worst = 0.0;
  for (int c = 0; c < ctx.cases; ++c) {
    const FourierCoeffs f = random_coeffs(dual, ctx.rng);
    const MatrixFamily b = random_ball_family(dual, ctx.rng);
    const HxIdentity r = hx_pairing_identity(f, b);
    worst = std::max(worst, r.deviation);
    ctx.emit({{"dual", dual->name()},
              {"case", c},
              {"lhs_re", r.lhs.real()},
              {"lhs_im", r.lhs.imag()},
              {"rhs_re", r.rhs.real()},
              {"rhs_im", r.rhs.imag()},
              {"deviation", r.deviation}},
             r.deviation <= 1e-12);
  }
  ctx.out.summary = "max |h(x) - sum n tr(f Q B)| " + sci(worst);
}

void run_trace_duality(Context& ctx) {
  constexpr int kPerCaseUnitaries = 200;
  double worst_aligned = 0.0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < ctx.cases; ++c) {
    const int n = 1 + c % 6;
    const MatrixC a = ginibre_matrix(n, ctx.rng);
    const TraceNormDuality r = trace_norm_duality(a, kPerCaseUnitaries, ctx.rng);
    const double aligned_gap = std::abs(r.aligned - r.exact);
    const double excess = r.random_sup - r.exact;
    worst_aligned = std::max(worst_aligned, aligned_gap);
    worst_excess = std::max(worst_excess, excess);
    ctx.emit({{"case", c},
              {"n", n},
              {"unitaries", kPerCaseUnitaries},
              {"trace_norm", r.exact},
              {"aligned", r.aligned},
              {"random_sup", r.random_sup}},
             aligned_gap <= 1e-10 && excess <= 1e-12);
  }
  const MatrixC a = ginibre_matrix(2, ctx.rng);
  const TraceNormDuality r = trace_norm_duality(a, ctx.trials, ctx.rng);
  const double fraction = r.random_sup / r.exact;
  ctx.emit({{"case", "2x2_dense_sampling"},
            {"n", 2},
            {"unitaries", ctx.trials},
            {"trace_norm", r.exact},
            {"aligned", r.aligned},
            {"random_sup", r.random_sup},
            {"fraction", fraction}},
           fraction >= 0.9 && r.random_sup <= r.exact + 1e-12 &&
               std::abs(r.aligned - r.exact) <= 1e-10);
  ctx.out.summary = "aligned gap " + sci(worst_aligned) + ", sup - tr|A| <= " +
                    sci(worst_excess) + ", 2x2 sup/tr|A| " + fixed(fraction);
}

void run_central_sum(Context& ctx) {
  const NamedDual duals[2] = {{"su2", make_su2_dual(ctx.kmax)},
                              {"suq2", make_suq2_dual(ctx.cfg.q, ctx.kmax)}};
  double worst = 0.0;
  for (const auto& [tag, dual] : duals) {
    {
      const CentralSum r = central_sum_check({1.0, 1.0, 1.0}, dual);
      const bool ok = std::abs(r.ell2_sq - 3.0) <= 3e-12;
      worst = std::max(worst, r.deviation);
      ctx.emit({{"dual", tag},
                {"case", "ones"},
                {"ell2_sq", r.ell2_sq},
                {"sum_c_sq", r.sum_c_sq},
                {"rel_dev", r.deviation}},
               ok);
    }
    for (int c = 0; c < ctx.cases; ++c) {
      std::vector<cd> coeffs(dual->size());
      for (auto& v : coeffs) v = cd(ctx.rng.normal(), ctx.rng.normal());
      const CentralSum r = central_sum_check(coeffs, dual);
      worst = std::max(worst, r.deviation);
      ctx.emit({{"dual", tag},
                {"case", c},
                {"ell2_sq", r.ell2_sq},
                {"sum_c_sq", r.sum_c_sq},
                {"rel_dev", r.deviation}},
               r.deviation <= 1e-12);
    }
  }
  ctx.out.summary = "max relative |ell2^2 - sum |c|^2| " + sci(worst);
}

// ---------------------------------------------------------- SU_q(2) chain

void run_corollary(Context& ctx) {
  const std::vector<double> qs =
      ctx.cfg.dual || ctx.out.config["q_grid"].is_null() ? std::vector<double>{ctx.cfg.q}
                                                           : ctx.out.config["q_grid"]
                                                                 .get<std::vector<double>>();
  const std::vector<double> epss = ctx.out.config["eps_grid"].get<std::vector<double>>();
  double worst_ratio = 0.0;
  for (double q : qs) {
    const DualPtr dual = make_suq2_dual(q, ctx.kmax);
    const GrowthReport growth = growth_report(*dual, ctx.kmax, q);
    ctx.emit({{"q", q}, {"check", "dimension_bound"}, {"kmax", ctx.kmax}},
             growth.dimension_bound_ok);
    for (double eps : epss) {
      int ok_count = 0;
      double max_ratio = 0.0;
      for (int c = 0; c < ctx.cases; ++c) {
        const FourierCoeffs f = random_coeffs(dual, ctx.rng);
        const CorollaryChain r = corollary_chain_check(q, eps, f, ctx.kmax);
        const bool ok = r.termwise_ok && r.lhs <= r.rhs + 1e-12 * r.rhs;
        ok_count += ok ? 1 : 0;
        max_ratio = std::max(max_ratio, r.lhs / r.rhs);
        if (!ok) {
          ctx.emit({{"q", q}, {"eps", eps}, {"case", c}, {"lhs", r.lhs}, {"rhs", r.rhs},
                    {"termwise_ok", r.termwise_ok}},
                   false);
        }
      }
      worst_ratio = std::max(worst_ratio, max_ratio);
      ctx.emit({{"q", q},
                {"eps", eps},
                {"check", "chain"},
                {"kmax", ctx.kmax},
                {"families", ctx.cases},
                {"holding", ok_count},
                {"max_lhs_over_rhs", max_ratio}},
               ok_count == ctx.cases);
    }
  }
  ctx.out.summary = "max lhs/rhs " + fixed(worst_ratio, 6) + " over " +
                    std::to_string(qs.size() * epss.size()) + " grid points";
}

void run_growth(Context& ctx) {
  const int kmax = ctx.kmax;
  std::vector<std::string> kinds;
  if (ctx.cfg.dual) {
    kinds.push_back(*ctx.cfg.dual);
  } else {
    kinds = {"su2", "suq2", "oNplus"};
  }
  std::string summary;
  for (const auto& kind : kinds) {
    const bool onplus = kind == "oNplus" || std::regex_match(kind, std::regex("o[0-9]+plus"));
    if (onplus) {
      const int n_param = kind == "oNplus" ? ctx.cfg.N : std::stoi(kind.substr(1));
      const auto dims = onplus_dimensions(n_param, kmax);
      bool increasing = true;
      const std::string tag = "o" + std::to_string(n_param) + "plus";
      for (int k = 0; k <= kmax; ++k) {
        const BigInt& n = dims[static_cast<std::size_t>(k)];
        if (k > 0) increasing = increasing && n > dims[static_cast<std::size_t>(k - 1)];
        Json nj;
        if (n <= BigInt(1) << 53) {
          nj = n.convert_to<long long>();
        } else {
          nj = n.str();
        }
        ctx.emit({{"dual", tag}, {"k", k}, {"n", nj}, {"d", nj}, {"ratio", 1.0}},
                 k == 0 || increasing);
      }
      summary += tag + (increasing ? " n_k increasing; " : " n_k NOT increasing; ");
      continue;
    }
    ExperimentConfig c = ctx.cfg;
    c.kmax = kmax;
    const DualPtr dual = make_named_dual(kind, c);
    const bool is_q = kind == "suq2";
    const GrowthReport g =
        growth_report(*dual, kmax, is_q ? std::optional<double>(ctx.cfg.q) : std::nullopt);
    for (const auto& row : g.rows) {
      bool ok = true;
      if (is_q) ok = row.d >= std::pow(ctx.cfg.q, -row.k);
      if (kind == "su2") ok = row.ratio == 1.0;
      ctx.emit({{"dual", dual->name()},
                {"k", row.k},
                {"n", row.n},
                {"d", row.d},
                {"ratio", row.ratio}},
               ok);
    }
    summary += dual->name() + " d_" + std::to_string(g.rows.back().k) + "/n = " +
               sci(g.rows.back().ratio) + "; ";
  }
  ctx.out.summary = summary;
}

// ------------------------------------------------------------- characters

void run_characters(Context& ctx) {
  std::vector<double> values;
  for (int k = 0; k <= ctx.kmax; ++k) values.push_back(character_l1(k));
  const double floor_value = *std::min_element(values.begin(), values.end());
  // start of the longest monotone tail
  int tail = ctx.kmax;
  if (values.size() >= 2) {
    const bool down = values[values.size() - 1] <= values[values.size() - 2];
    while (tail > 0 && (down ? values[tail] <= values[tail - 1] : values[tail] >= values[tail - 1])) {
      --tail;
    }
  }
  const double limit = 8.0 / (std::numbers::pi * std::numbers::pi);
  for (int k = 0; k <= ctx.kmax; ++k) {
    Json body = {{"k", k}, {"value", values[k]}};
    bool ok = values[k] >= 0.5;
    if (k == 200) {
      body["limit"] = limit;
      ok = ok && std::abs(values[k] - limit) <= 0.01;
    }
    ctx.emit(std::move(body), ok);
  }
  ctx.out.summary = "min h(|chi_k|) " + fixed(floor_value) + ", monotone from k = " +
                    std::to_string(tail) + ", last " + fixed(values.back());
}

void run_cotype2(Context& ctx) {
  const double half_normal = std::sqrt(2.0 / std::numbers::pi);
  double lowest = std::numeric_limits<double>::infinity();
  const auto report = [&](const std::string& corpus, std::size_t size, const Cotype2Estimate& e,
                          bool ok) {
    lowest = std::min(lowest, e.ratio);
    ctx.emit({{"corpus", corpus}, {"size", size}, {"trials", ctx.trials}, {"ratio", e.ratio},
              {"std_error", e.std_error}},
             ok);
  };
  {
    const FiniteGroupTable z8 = cyclic_group(8);
    const HaarModel model = HaarModel::from_table(z8);
    std::vector<FourierCoeffs> xs;
    for (std::size_t k = 0; k < model.dual->size(); ++k) {
      FourierCoeffs x(model.dual);
      x.set(k, MatrixC::Identity(1, 1));
      xs.push_back(std::move(x));
    }
    const auto e = cotype2_ratio(xs, ctx.trials, ctx.rng, model);
    report("z8_characters", xs.size(), e, e.ratio >= 0.2);
  }
  const FiniteGroupTable s3 = symmetric_group_s3();
  const HaarModel model = HaarModel::from_table(s3);
  for (int c = 0; c < ctx.cases; ++c) {
    std::vector<FourierCoeffs> xs;
    const int size = 2 + c % 4;
    for (int j = 0; j < size; ++j) xs.push_back(random_sparse_coeffs(model.dual, ctx.rng));
    const auto e = cotype2_ratio(xs, ctx.trials, ctx.rng, model);
    report("s3_random_" + std::to_string(c), xs.size(), e, e.ratio >= 0.2);
  }
  {
    const std::vector<FourierCoeffs> xs{random_coeffs(model.dual, ctx.rng)};
    const auto e = cotype2_ratio(xs, ctx.trials, ctx.rng, model);
    report("s3_singleton", 1, e,
           e.ratio >= 0.2 && std::abs(e.ratio - half_normal) <= 3.0 * e.std_error);
  }
  ctx.out.summary = "lowest ratio " + fixed(lowest);
}

// ----------------------------------------------------------------- table

struct Entry {
  const char* name;
  const char* description;
  bool stochastic;
  bool takes_dual;
  Defaults defaults;
  void (*fn)(Context&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"plancherel", "ell2 norm vs Haar Gram expansion of random families", true, true,
       {std::nullopt, 34, 4, std::nullopt}, run_plancherel},
      {"pairing", "self pairing and hermitian symmetry of the dual pairing", true, true,
       {std::nullopt, 34, 4, std::nullopt}, run_pairing},
      {"convolve-check", "dual convolution against brute force on S_3", true, false,
       {std::nullopt, 50, std::nullopt, std::nullopt}, run_convolve_check},
      {"randomize-l2", "L2 norm invariance under Haar randomization", true, true,
       {std::nullopt, 100, 4, std::nullopt}, run_randomize_l2},
      {"four-unitary", "contraction as half a sum of four unitaries", true, false,
       {std::nullopt, 1000, std::nullopt, std::nullopt}, run_four_unitary},
      {"ball-decomposition", "f_B as half a sum of four unitary randomizations", true, true,
       {std::nullopt, 50, 4, std::nullopt}, run_ball_decomposition},
      {"gaussian-norms", "E||G_n|| for normalized Gaussian matrices", true, false,
       {1000, std::nullopt, std::nullopt, std::nullopt}, run_gaussian_norms},
      {"helgason-gaussian", "Gaussian double integral vs sqrt(2/pi) ell2", true, false,
       {10000, 20, std::nullopt, std::nullopt}, run_helgason_gaussian},
      {"helgason-instance", "sup_U ||f_U||_1 next to ||f||_2 on small groups", true, false,
       {1000, std::nullopt, std::nullopt, std::nullopt}, run_helgason_instance},
      {"lemma35", "row/column coefficient norm bounds on SU(2)", true, false,
       {std::nullopt, 100, 4, std::nullopt}, run_lemma35},
      {"tb-contraction", "operator norm of T_B for random contractions B", true, false,
       {std::nullopt, 100, std::nullopt, std::nullopt}, run_tb_contraction},
      {"hx-identity", "h(x) against sum n tr(f Q B) on SU_q(2)", true, false,
       {std::nullopt, 100, 4, std::nullopt}, run_hx_identity},
      {"trace-duality", "tr|A| vs aligned and random unitaries", true, false,
       {100000, 100, std::nullopt, std::nullopt}, run_trace_duality},
      {"central-sum", "ell2 of central families vs sum |c|^2", true, false,
       {std::nullopt, 100, 6, std::nullopt}, run_central_sum},
      {"corollary-suq2", "SU_q(2) quantum-dimension series chain", true, false,
       {std::nullopt, 50, 60, std::nullopt}, run_corollary},
      {"growth", "table of (k, n, d, d/n)", false, true,
       {std::nullopt, std::nullopt, 40, std::nullopt}, run_growth},
      {"characters", "h(|chi_k|) on SU(2)", false, false,
       {std::nullopt, std::nullopt, 200, std::nullopt}, run_characters},
      {"cotype2", "Gaussian cotype-2 ratio on finite groups", true, false,
       {10000, 5, std::nullopt, std::nullopt}, run_cotype2},
  };
  return entries;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (name == e.name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_experiment(const std::string& name) {
  return std::any_of(registry().begin(), registry().end(),
                     [&](const Entry& e) { return name == e.name; });
}

bool experiment_is_stochastic(const std::string& name) { return find_entry(name).stochastic; }

std::string experiment_description(const std::string& name) {
  return find_entry(name).description;
}

DualPtr make_named_dual(const std::string& kind, const ExperimentConfig& config) {
  const int kmax = config.kmax.value_or(4);
  std::smatch m;
  if (kind == "trivial") return make_trivial_dual();
  if (kind == "zN") return cyclic_group(config.N).dual();
  if (std::regex_match(kind, m, std::regex("z([0-9]+)"))) {
    return cyclic_group(std::stoi(m[1])).dual();
  }
  if (kind == "s3") return symmetric_group_s3().dual();
  if (kind == "su2") return make_su2_dual(kmax);
  if (kind == "suq2") return make_suq2_dual(config.q, kmax);
  if (kind == "oNplus") return make_onplus_dual(config.N, kmax);
  if (std::regex_match(kind, m, std::regex("o([0-9]+)plus"))) {
    return make_onplus_dual(std::stoi(m[1]), kmax);
  }
  throw std::invalid_argument("unknown dual '" + kind +
                              "' (expected trivial, zN, s3, su2, suq2, oNplus)");
}

ExperimentOutput run_experiment(const std::string& name, const ExperimentConfig& config) {
  const Entry& entry = find_entry(name);
  if (entry.stochastic && !config.seed) {
    throw std::invalid_argument("'" + name + "' is stochastic and needs --seed");
  }
  const auto t0 = Clock::now();
  ExperimentOutput out;
  out.name = name;

  const auto& names = experiment_names();
  const auto stream =
      static_cast<std::uint64_t>(std::find(names.begin(), names.end(), name) - names.begin());
  Context ctx{config, out, Rng(config.seed.value_or(0), stream)};
  ctx.seed = config.seed.value_or(0);
  ctx.trials = config.trials.value_or(entry.defaults.trials.value_or(0));
  ctx.cases = config.cases.value_or(entry.defaults.cases.value_or(0));
  ctx.kmax = config.kmax.value_or(entry.defaults.kmax.value_or(0));
  if (entry.defaults.trials && ctx.trials < 2) throw std::invalid_argument("--trials must be >= 2");
  if (entry.defaults.cases && ctx.cases < 1) throw std::invalid_argument("--cases must be >= 1");
  if (ctx.kmax < 0) throw std::invalid_argument("--kmax must be >= 0");

  Json& c = out.config;
  if (entry.takes_dual) {
    c["dual"] = config.dual ? Json(*config.dual) : Json("sweep");
  }
  c["q"] = config.q;
  if (entry.defaults.kmax || config.kmax) c["kmax"] = ctx.kmax;
  c["N"] = config.N;
  if (entry.defaults.trials) c["trials"] = ctx.trials;
  if (entry.defaults.cases) c["cases"] = ctx.cases;
  if (name == "gaussian-norms") c["nmax"] = config.nmax;
  if (name == "lemma35") c["resolution"] = config.resolution;
  if (name == "corollary-suq2") {
    // an explicit --dual suq2 pins q to --q; otherwise the fixed grid
    if (!config.dual) c["q_grid"] = {0.3, 0.5, 0.9};
    c["eps_grid"] = config.eps ? Json::array({*config.eps}) : Json::array({0.1, 0.5, 1.0});
  }
  c["seed"] = config.seed ? Json(*config.seed) : Json(nullptr);

  entry.fn(ctx);
  out.elapsed_ms = ms_since(t0);
  return out;
}

}  // namespace cqg
