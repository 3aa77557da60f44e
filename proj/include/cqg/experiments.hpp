#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqg/serialization.hpp"

namespace cqg {

inline constexpr const char* kToolkitVersion = "0.3.0";

/// Options shared by every experiment. Unset optionals take the per-experiment
/// defaults listed in experiment_defaults().
struct ExperimentConfig {
  /// trivial | zN | s3 | su2 | suq2 | oNplus. Unset: sweep every built-in dual
  /// at desk-scale truncation (experiments that take a dual).
  std::optional<std::string> dual;
  double q = 0.5;
  std::optional<int> kmax;
  int N = 3;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> cases;
  int nmax = 256;
  std::optional<double> eps;
  int resolution = 8;
};

struct ExperimentOutput {
  std::string name;
  /// Fully resolved configuration.
  Json config = Json::object();
  Json records = Json::array();
  std::vector<std::string> failures;
  /// One-line human summary.
  std::string summary;
  double elapsed_ms = 0.0;

  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& experiment_names();
bool is_experiment(const std::string& name);
/// False for the purely deterministic experiments (growth, characters).
bool experiment_is_stochastic(const std::string& name);
std::string experiment_description(const std::string& name);

/// Runs one named experiment ("all" is handled by the caller). Throws
/// std::invalid_argument for an unknown name or a bad configuration.
ExperimentOutput run_experiment(const std::string& name, const ExperimentConfig& config);

/// Dual named by the config, e.g. "z8" style via dual = "zN" and N.
DualPtr make_named_dual(const std::string& kind, const ExperimentConfig& config);

}  // namespace cqg
