#pragma once

#include <cstdint>
#include <random>

namespace cqg {

struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Seeded generator with host-independent output.
///
/// The engine (mt19937_64 seeded through seed_seq) is fully specified by the
/// standard. The std:: distributions are not, so uniform and normal variates
/// are derived here directly from the engine's 64-bit words.
class Rng {
 public:
  explicit Rng(RngSeed s);
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngSeed{seed, stream}) {}

  /// Uniform on (0, 1), never exactly 0 or 1.
  double uniform();
  /// Standard normal, Box-Muller.
  double normal();

  /// Independent generator for a derived stream.
  Rng split(std::uint64_t stream) const;

  RngSeed seed() const { return seed_; }

 private:
  RngSeed seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cqg
