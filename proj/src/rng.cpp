#include "cqg/rng.hpp"

#include <cmath>
#include <numbers>

namespace cqg {

namespace {

std::mt19937_64 make_engine(RngSeed s) {
  std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                    static_cast<std::uint32_t>(s.stream),
                    static_cast<std::uint32_t>(s.stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(RngSeed s) : seed_(s), engine_(make_engine(s)) {}

double Rng::uniform() {
  // 53 random bits, shifted off zero by half an ulp.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(RngSeed{seed_.seed, seed_.stream * 0x9E3779B97F4A7C15ULL + stream + 1});
}

}  // namespace cqg
