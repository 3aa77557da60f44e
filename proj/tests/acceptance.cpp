#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cqg/classical_eval.hpp"
#include "cqg/experiments.hpp"

using namespace cqg;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

ExperimentOutput run(const std::string& name, ExperimentConfig cfg = {}) {
  if (experiment_is_stochastic(name)) cfg.seed = kSeed;
  return run_experiment(name, cfg);
}

void require_experiment(Outcome& o, const ExperimentOutput& e) {
  o.require(e.pass(), e.name + " contracts");
  for (const auto& f : e.failures) o.detail << "\n    " << f;
}

double max_field(const Json& records, const std::string& key) {
  double m = 0.0;
  for (const auto& r : records) {
    if (r.contains(key)) m = std::max(m, r[key].get<double>());
  }
  return m;
}

double mid_character_l1(int k) {
  const int panels = 2000000;
  const double h = std::numbers::pi / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double t = (i + 0.5) * h;
    total += std::abs(std::sin((k + 1) * t) * std::sin(t));
  }
  return 2.0 / std::numbers::pi * total * h;
}

Outcome plancherel() {
  Outcome o;
  ExperimentConfig cfg;
  cfg.cases = 34;
  const auto e = run("plancherel", cfg);
  require_experiment(o, e);
  const double dev = max_field(e.records, "rel_dev");
  o.require(e.records.size() >= 200, "at least 200 families");
  o.require(dev <= 1e-12, "relative deviation <= 1e-12");
  o.detail << " families=" << e.records.size() << " max_rel_dev=" << dev;
  return o;
}

Outcome randomize_l2() {
  Outcome o;
  const auto e = run("randomize-l2");
  require_experiment(o, e);
  const double dev = max_field(e.records, "rel_dev");
  o.require(e.records.size() >= 600, "100 pairs on each of 6 duals");
  o.require(dev <= 1e-10, "relative deviation <= 1e-10");
  o.detail << " pairs=" << e.records.size() << " max_rel_dev=" << dev;
  return o;
}

Outcome four_unitary() {
  Outcome o;
  const auto fu = run("four-unitary");
  const auto ball = run("ball-decomposition");
  require_experiment(o, fu);
  require_experiment(o, ball);
  int cases = 0, nmax = 0;
  for (const auto& r : fu.records) {
    cases += r.at("cases").get<int>();
    nmax = std::max(nmax, r.at("n").get<int>());
  }
  const double rec = max_field(fu.records, "max_reconstruction_defect");
  const double uni = max_field(fu.records, "max_unitarity_defect");
  const double dev = max_field(ball.records, "deviation");
  o.require(cases == 1000 && nmax <= 16, "1000 contractions with n <= 16");
  o.require(rec <= 1e-9 && uni <= 1e-9, "decomposition defects <= 1e-9");
  o.require(dev <= 1e-9, "ball identity <= 1e-9");
  o.detail << " contractions=" << cases << " reconstruction=" << rec << " unitarity=" << uni
           << " ball=" << dev;
  return o;
}

Outcome gaussian_norms() {
  Outcome o;
  const auto e = run("gaussian-norms");
  require_experiment(o, e);
  int rows = 0;
  for (const auto& r : e.records) {
    const int n = r.at("n").get<int>();
    const double mean = r.at("mean").get<double>(), se = r.at("std_error").get<double>();
    o.require(r.at("trials").get<int>() >= 1000, "1000 trials");
    if (n == 1) {
      o.require(std::abs(mean - std::sqrt(2.0 / std::numbers::pi)) <= 3.0 * se,
                "n = 1 within 3 stderr of sqrt(2/pi)");
    } else {
      o.require(mean >= 1.2 && mean <= 2.6, "n = " + std::to_string(n) + " in [1.2, 2.6]");
    }
    o.detail << " n" << n << "=" << mean;
    ++rows;
  }
  o.require(rows == 9, "n in {1, 2, 4, ..., 256}");
  return o;
}

Outcome helgason_gaussian() {
  Outcome o;
  const auto e = run("helgason-gaussian");
  require_experiment(o, e);
  double worst = 0.0;
  int real_cases = 0, literal_ok = 0;
  for (const auto& r : e.records) {
    const double se = r.at("std_error").get<double>();
    const double mean = r.at("mean").get<double>();
    const double dev = std::abs(mean - r.at("exact").get<double>()) / se;
    worst = std::max(worst, dev);
    o.require(dev <= 3.0, "within 3 stderr of the exact expectation");
    const bool literal = std::abs(mean - r.at("predicted").get<double>()) <= 3.0 * se;
    literal_ok += literal;
    if (r.at("real_direction").get<bool>()) {
      ++real_cases;
      o.require(literal, "real-direction case within 3 stderr of sqrt(2/pi) ell2");
    }
  }
  o.require(e.records.size() == 20, "20-case corpus");
  o.require(real_cases > 0, "corpus contains real-direction cases");
  o.detail << " cases=" << e.records.size() << " worst_sigma_vs_exact=" << worst
           << " real_direction_cases=" << real_cases << " within_3se_of_sqrt2pi_ell2=" << literal_ok;
  return o;
}

Outcome lemma35() {
  Outcome o;
  ExperimentConfig cfg;
  cfg.dual = "su2";
  cfg.kmax = 4;
  const auto e = run("lemma35", cfg);
  require_experiment(o, e);
  double worst = 1e300;
  int upper = 0, lower = 0;
  for (const auto& r : e.records) {
    worst = std::min(worst, r.at("margin").get<double>());
    (r.at("side") == "upper" ? upper : lower) += 1;
    o.require(r.at("k").get<int>() <= 4, "k <= 4");
  }
  o.require(upper >= 100 && lower >= 100, "100 instances per side");
  o.require(worst >= -kQuadratureMarginAllowance, "margins >= -1e-6");
  o.detail << " upper=" << upper << " lower=" << lower << " min_margin=" << worst;
  return o;
}

Outcome tb_contraction() {
  Outcome o;
  const auto e = run("tb-contraction");
  require_experiment(o, e);
  int su2 = 0, suq2 = 0;
  for (const auto& r : e.records) {
    o.require(r.at("multipliers").get<int>() >= 100, "100 multipliers per irrep");
    if (r.at("dual") == "su2") su2 = std::max(su2, r.at("k").get<int>());
    if (r.at("dual") == "suq2") suq2 = std::max(suq2, r.at("k").get<int>());
  }
  const double worst = max_field(e.records, "max_tb_norm");
  o.require(su2 == 6 && suq2 == 8, "SU(2) k <= 6 and SU_q(2) k <= 8");
  o.require(worst <= 1.0 + 1e-9, "||T_B|| <= 1 + 1e-9");
  o.detail << " max_tb_norm=" << worst;
  return o;
}

Outcome hx_identity() {
  Outcome o;
  ExperimentConfig cfg;
  cfg.dual = "suq2";
  cfg.kmax = 4;
  const auto e = run("hx-identity", cfg);
  require_experiment(o, e);
  const double dev = max_field(e.records, "deviation");
  o.require(e.records.size() >= 100, "100 pairs");
  o.require(dev <= 1e-12, "deviation <= 1e-12");
  o.detail << " pairs=" << e.records.size() << " max_deviation=" << dev;
  return o;
}

Outcome trace_duality() {
  Outcome o;
  const auto e = run("trace-duality");
  require_experiment(o, e);
  double aligned = 0.0, excess = -1e300, fraction = 0.0;
  for (const auto& r : e.records) {
    const double t = r.at("trace_norm").get<double>();
    aligned = std::max(aligned, std::abs(r.at("aligned").get<double>() - t));
    excess = std::max(excess, r.at("random_sup").get<double>() - t);
    if (r.contains("fraction")) {
      fraction = r.at("fraction").get<double>();
      o.require(r.at("unitaries").get<int>() >= 100000, "10^5 trials in the 2x2 case");
    }
  }
  o.require(aligned <= 1e-10, "aligned unitary within 1e-10");
  o.require(excess <= 1e-12, "random sup never above tr|A| + 1e-12");
  o.require(fraction >= 0.9, "2x2 random sup >= 0.9 tr|A|");
  o.detail << " aligned_dev=" << aligned << " max_excess=" << excess << " fraction_2x2=" << fraction;
  return o;
}

Outcome central_sum() {
  Outcome o;
  const auto e = run("central-sum");
  require_experiment(o, e);
  int su2 = 0, suq2 = 0;
  double dev = 0.0;
  for (const auto& r : e.records) {
    su2 += r.at("dual") == "su2";
    suq2 += r.at("dual") == "suq2";
    if (r.at("case").is_number()) dev = std::max(dev, r.at("rel_dev").get<double>());
  }
  o.require(su2 >= 100 && suq2 >= 100, "100 families on SU(2) and SU_q(2)");
  o.require(dev <= 1e-12, "relative deviation <= 1e-12");
  o.detail << " su2=" << su2 << " suq2=" << suq2 << " max_rel_dev=" << dev;
  return o;
}

Outcome corollary() {
  Outcome o;
  const auto e = run("corollary-suq2");
  require_experiment(o, e);
  int grid = 0, bounds = 0;
  double worst = 0.0;
  for (const auto& r : e.records) {
    o.require(r.at("kmax").get<int>() == 60, "kmax = 60");
    if (r.at("check") == "chain") {
      ++grid;
      o.require(r.at("holding") == r.at("families") && r.at("families").get<int>() == 50,
                "50 families hold");
      worst = std::max(worst, r.at("max_lhs_over_rhs").get<double>());
    } else if (r.at("check") == "dimension_bound") {
      ++bounds;
      o.require(r.at("pass").get<bool>(), "d_k >= q^-k");
    }
  }
  o.require(grid == 9 && bounds == 3, "3 x 3 grid and dimension bound for each q");
  o.require(worst <= 1.0 + 1e-12, "lhs <= rhs");
  o.detail << " grid_points=" << grid << " max_lhs_over_rhs=" << worst;
  return o;
}

Outcome characters() {
  Outcome o;
  const auto e = run("characters");
  require_experiment(o, e);
  double lo = 1e300;
  for (const auto& r : e.records) {
    if (r.contains("value") && r.contains("k")) lo = std::min(lo, r.at("value").get<double>());
  }
  const double v200 = character_l1(200);
  const double oracle = mid_character_l1(200);
  o.require(lo >= 0.5, "h(|chi_k|) >= 0.5 for k <= 200");
  o.require(std::abs(v200 - 8.0 / (std::numbers::pi * std::numbers::pi)) <= 0.01,
            "k = 200 within 0.01 of 8/pi^2");
  o.require(std::abs(v200 - oracle) <= 1e-9, "agrees with midpoint oracle");
  o.detail << " min=" << lo << " k200=" << v200 << " midpoint=" << oracle;
  return o;
}

Outcome cotype2() {
  Outcome o;
  const auto e = run("cotype2");
  require_experiment(o, e);
  double lo = 1e300;
  bool singleton = false;
  for (const auto& r : e.records) {
    const double ratio = r.at("ratio").get<double>();
    lo = std::min(lo, ratio);
    if (r.at("size").get<int>() == 1) {
      singleton = true;
      o.require(std::abs(ratio - std::sqrt(2.0 / std::numbers::pi)) <= 3.0 * r.at("std_error").get<double>(),
                "singleton within 3 stderr of sqrt(2/pi)");
    }
  }
  o.require(singleton, "corpus contains a singleton");
  o.require(lo >= 0.2, "ratio >= 0.2");
  o.detail << " corpus=" << e.records.size() << " min_ratio=" << lo;
  return o;
}

Outcome convolution() {
  Outcome o;
  const auto e = run("convolve-check");
  require_experiment(o, e);
  int s3 = 0;
  for (const auto& r : e.records) s3 += r.at("group") == "s3";
  const double brute = max_field(e.records, "brute_force_dev");
  const double assoc = max_field(e.records, "associativity_dev");
  o.require(s3 >= 50, "50 pairs on S_3");
  o.require(brute <= 1e-12 && assoc <= 1e-12, "deviations <= 1e-12");
  o.detail << " pairs=" << s3 << " brute_force=" << brute << " associativity=" << assoc;
  return o;
}

Json run_cli_all(const std::string& path) {
  const std::string cmd = std::string("\"") + CQG_CLI_PATH + "\" all --seed 7 --out \"" + path +
                          "\" > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) throw std::runtime_error("cqg all exited with status " + std::to_string(rc));
  std::ifstream is(path);
  return Json::parse(is);
}

Outcome determinism() {
  Outcome o;
  const std::string a = "acceptance_all_a.json", b = "acceptance_all_b.json";
  const Json da = run_cli_all(a), db = run_cli_all(b);
  const std::string ha = da.at("content_hash").get<std::string>();
  const std::string hb = db.at("content_hash").get<std::string>();
  o.require(ha == hb, "identical content hash");
  o.require(da.at("verdict").at("pass").get<bool>(), "all contracts hold");
  o.detail << " hash=" << ha.substr(0, 16) << " records=" << da.at("records").size();
  std::remove(a.c_str());
  std::remove(b.c_str());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Plancherel consistency", plancherel},
      {"L2 invariance under Haar randomization", randomize_l2},
      {"four-unitary and ball decomposition", four_unitary},
      {"Gaussian matrix norms", gaussian_norms},
      {"Gaussian double integral", helgason_gaussian},
      {"coefficient norm bounds on SU(2)", lemma35},
      {"T_B contraction", tb_contraction},
      {"hx pairing identity", hx_identity},
      {"trace-norm duality", trace_duality},
      {"central sum identity", central_sum},
      {"SU_q(2) geometric-series chain", corollary},
      {"character L1 floor", characters},
      {"cotype-2 floor", cotype2},
      {"convolution oracle", convolution},
      {"determinism of all --seed 7", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " [exception: " << ex.what() << "]";
    }
    failed += !o.pass;
    std::cout << "criterion " << (i + 1) << " " << criteria[i].first << ": "
              << (o.pass ? "PASS" : "FAIL") << " |" << o.detail.str() << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed"
                       : std::string("acceptance: all 15 criteria pass"))
            << std::endl;
  return failed ? 1 : 0;
}
