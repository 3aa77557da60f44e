#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace cqg::cli {

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return s;
}

std::string help_footer() {
  std::ostringstream os;
  os << "Subcommands:\n";
  for (const auto& name : experiment_names()) {
    os << "  " << std::left << std::setw(20) << name << experiment_description(name)
       << (experiment_is_stochastic(name) ? "" : " (deterministic)") << "\n";
  }
  os << "  " << std::left << std::setw(20) << "all"
     << "every subcommand above with its defaults\n\n"
     << "Without --dual, dual-based subcommands sweep trivial, z8, s3, su2 (kmax 6),\n"
     << "suq2 (kmax 6) and o3plus (kmax 2). Unset --trials/--cases/--kmax take the\n"
     << "subcommand defaults, which are echoed in meta.config of the output.\n"
     << "Exit status: 0 all contracts hold, 1 contract failure, 2 usage error.";
  return os.str();
}

}  // namespace

Json strip_timing(const Json& doc) {
  if (doc.is_object()) {
    Json out = Json::object();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() == "elapsed_ms" || it.key() == "content_hash") continue;
      out[it.key()] = strip_timing(it.value());
    }
    return out;
  }
  if (doc.is_array()) {
    Json out = Json::array();
    for (const auto& v : doc) out.push_back(strip_timing(v));
    return out;
  }
  return doc;
}

std::string content_hash(const Json& doc) {
  const std::string text = strip_timing(doc).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

// Columns: record fields in order of first appearance, nested config dropped.
std::string to_csv(const Json& records) {
  std::vector<std::string> cols;
  for (const auto& r : records) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() == "config") continue;
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ",";
      if (r.contains(cols[i])) os << csv_cell(r[cols[i]]);
    }
    os << "\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Desk-scale checks of Fourier analysis on compact quantum groups", "cqg"};
  app.footer(help_footer());

  std::vector<std::string> choices = experiment_names();
  choices.push_back("all");

  std::string sub;
  ExperimentConfig cfg;
  std::uint64_t seed = 0;
  int trials = 0;
  int cases = 0;
  int kmax = 0;
  double eps = 0.0;
  std::string dual;
  std::string out_path;
  std::string format = "json";

  app.add_option("subcommand", sub, "Experiment to run")->required()->check(CLI::IsMember(choices));
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (required for stochastic subcommands)");
  auto* trials_opt = app.add_option("--trials", trials, "Monte Carlo trials");
  auto* cases_opt = app.add_option("--cases", cases, "Number of random instances");
  app.add_option("--out", out_path, "Write records to this path");
  app.add_option("--format", format, "Output format for --out")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--q", cfg.q, "Deformation parameter for suq2, 0 < q < 1")->capture_default_str();
  auto* kmax_opt = app.add_option("--kmax", kmax, "Truncation of the dual");
  auto* dual_opt = app.add_option("--dual", dual, "trivial | zN | s3 | su2 | suq2 | oNplus");
  app.add_option("--N", cfg.N, "Parameter N for zN and oNplus")->capture_default_str();
  app.add_option("--nmax", cfg.nmax, "Largest matrix size for gaussian-norms")
      ->capture_default_str();
  auto* eps_opt = app.add_option("--eps", eps, "Exponent eps for corollary-suq2");
  app.add_option("--resolution", cfg.resolution, "SU(2) quadrature resolution")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*seed_opt) cfg.seed = seed;
  if (*trials_opt) cfg.trials = trials;
  if (*cases_opt) cfg.cases = cases;
  if (*kmax_opt) cfg.kmax = kmax;
  if (*dual_opt) cfg.dual = dual;
  if (*eps_opt) cfg.eps = eps;

  const std::vector<std::string> names =
      sub == "all" ? experiment_names() : std::vector<std::string>{sub};
  if (sub == "all" && !cfg.seed) {
    std::cerr << "cqg: 'all' includes stochastic subcommands and needs --seed\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ExperimentOutput> outputs;
  try {
    for (const auto& name : names) outputs.push_back(run_experiment(name, cfg));
  } catch (const std::invalid_argument& e) {
    std::cerr << "cqg: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "cqg: " << e.what() << "\n";
    return 2;
  }
  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json doc;
  Json& meta = doc["meta"];
  meta["toolkit"] = "cqg";
  meta["version"] = kToolkitVersion;
  meta["subcommand"] = sub;
  meta["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  if (sub == "all") {
    Json per = Json::object();
    for (const auto& o : outputs) per[o.name] = o.config;
    meta["config"] = per;
  } else {
    meta["config"] = outputs.front().config;
  }
  meta["elapsed_ms"] = total_ms;
  doc["records"] = Json::array();
  bool pass = true;
  Json failures = Json::array();
  Json experiments = Json::array();
  for (const auto& o : outputs) {
    for (const auto& r : o.records) doc["records"].push_back(r);
    pass = pass && o.pass();
    for (const auto& f : o.failures) failures.push_back(f);
    experiments.push_back({{"name", o.name},
                           {"pass", o.pass()},
                           {"records", o.records.size()},
                           {"summary", o.summary},
                           {"elapsed_ms", o.elapsed_ms}});
  }
  doc["verdict"] = {{"pass", pass}, {"experiments", experiments}, {"failures", failures}};
  doc["content_hash"] = content_hash(doc);

  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cqg: cannot open " << out_path << " for writing\n";
      return 2;
    }
    if (format == "csv") {
      os << to_csv(doc["records"]);
    } else {
      os << doc.dump(2) << "\n";
    }
  }

  std::cout << std::left << std::setw(20) << "subcommand" << std::right << std::setw(8)
            << "records" << "  " << std::setw(7) << std::left << "verdict" << "  summary\n";
  for (const auto& o : outputs) {
    std::cout << std::left << std::setw(20) << o.name << std::right << std::setw(8)
              << o.records.size() << "  " << std::setw(7) << std::left
              << (o.pass() ? "PASS" : "FAIL") << "  " << o.summary << "\n";
  }
  std::cout << "content_hash " << doc["content_hash"].get<std::string>() << "\n";
  std::cout << (pass ? "all contracts hold" : "CONTRACT FAILURE") << "\n";
  for (const auto& f : failures) std::cerr << "FAILED " << f.get<std::string>() << "\n";
  return pass ? 0 : 1;
}

}  // namespace cqg::cli
