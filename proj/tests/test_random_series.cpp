#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cqg/classical_eval.hpp"
#include "cqg/random_series.hpp"

using namespace cqg;

namespace {

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

template <typename F>
Moments sample(int trials, F&& draw) {
  double s = 0.0, s2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = draw();
    s += v;
    s2 += v * v;
  }
  const double mean = s / trials;
  const double var = (s2 - trials * mean * mean) / (trials - 1);
  return {mean, std::sqrt(var / trials)};
}

const double kHalfNormal = std::sqrt(2.0 / std::numbers::pi);

}  // namespace

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  for (int i = 0; i < 100; ++i) {
    const double x = a.normal();
    EXPECT_EQ(x, b.normal());
    EXPECT_NE(x, c.normal());
    EXPECT_NE(x, d.normal());
  }
  Rng e(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = e.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  const Rng base(5, 0);
  Rng s1 = base.split(9), s2 = base.split(9);
  EXPECT_EQ(s1.uniform(), s2.uniform());
}

TEST(GaussianMatrix, EntryMoments) {
  Rng rng(21, 0);
  const Moments abs1 = sample(100000, [&] { return std::abs(gaussian_matrix(1, rng)(0, 0)); });
  EXPECT_LE(std::abs(abs1.mean - kHalfNormal), 3.0 * abs1.std_error);

  const Moments entries = sample(20000, [&] { return gaussian_matrix(4, rng)(1, 2) * 2.0; });
  EXPECT_LE(std::abs(entries.mean), 3.0 * entries.std_error);

  Rng r1(3, 1), r2(3, 1);
  EXPECT_EQ(gaussian_matrix(5, r1), gaussian_matrix(5, r2));
  EXPECT_THROW(gaussian_matrix(0, rng), std::invalid_argument);
}

TEST(ExpectedOperatorNorm, HalfNormalAndBoundedBand) {
  Rng rng(22, 0);
  const MonteCarloEstimate one = expected_operator_norm(1, 100000, rng);
  EXPECT_LE(std::abs(one.mean - kHalfNormal), 3.0 * one.std_error);
  for (int n : {8, 64}) {
    const MonteCarloEstimate e = expected_operator_norm(n, 300, rng);
    EXPECT_GE(e.mean, 1.2);
    EXPECT_LE(e.mean, 2.6);
  }
  const MonteCarloEstimate big = expected_operator_norm(128, 100, rng);
  EXPECT_GE(big.mean, 1.4);
  EXPECT_LE(big.mean, 2.3);
  EXPECT_THROW(expected_operator_norm(2, 1, rng), std::invalid_argument);
}

TEST(HaarUnitary, UnitaryAndCirclePhase) {
  Rng rng(23, 0);
  for (int n = 1; n <= 12; ++n) EXPECT_LE(unitarity_defect(haar_unitary(n, rng)), 1e-12);
  double re = 0.0, im = 0.0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const cd z = haar_unitary(1, rng)(0, 0);
    re += z.real();
    im += z.imag();
  }
  // each component has variance 1/2
  const double se = std::sqrt(0.5 / trials);
  EXPECT_LE(std::abs(re / trials), 3.0 * se);
  EXPECT_LE(std::abs(im / trials), 3.0 * se);
}

// E|tr U|^2 over U(2) equals int_SU(2) chi_1^2 = 1; the oracle integrates that
// second moment with the SU(2) quadrature.
TEST(HaarUnitary, TraceSecondMomentAgainstQuadrature) {
  const SU2Quadrature quad = make_su2_quadrature();
  double oracle = 0.0;
  for (std::size_t x = 0; x < quad.nodes().size(); ++x) {
    oracle += quad.weights()[x] * std::norm(quad.nodes()[x].trace());
  }
  EXPECT_NEAR(oracle, 1.0, 1e-12);

  Rng rng(24, 0);
  const Moments m = sample(100000, [&] { return std::norm(haar_unitary(2, rng).trace()); });
  EXPECT_LE(std::abs(m.mean - oracle), 3.0 * m.std_error);
  // entry second moment 1/n
  const Moments e = sample(50000, [&] { return std::norm(haar_unitary(3, rng)(0, 0)); });
  EXPECT_LE(std::abs(e.mean - 1.0 / 3.0), 3.0 * e.std_error);
}

TEST(Randomize, ActionAndInvariance) {
  Rng rng(25, 0);
  const DualPtr triv = make_trivial_dual();
  FourierCoeffs c(triv);
  c.set(0, MatrixC::Constant(1, 1, cd(2.0, -1.0)));
  const double theta = 0.7;
  const FourierCoeffs rotated = randomize(c, MatrixFamily::scalar(triv, std::polar(1.0, theta)));
  EXPECT_NEAR(std::abs(rotated.at(0)(0, 0) - std::polar(1.0, theta) * cd(2.0, -1.0)), 0.0, 1e-15);

  const DualPtr dual = make_suq2_dual(0.5, 5);
  for (int t = 0; t < 20; ++t) {
    const FourierCoeffs f = random_coeffs(dual, rng);
    EXPECT_EQ(ell_infty_norm(randomize(f, MatrixFamily::identity(dual)) - f), 0.0);
    EXPECT_EQ(l2_invariance_check(f, MatrixFamily::identity(dual)), 0.0);
    const MatrixFamily u = MatrixFamily::haar(dual, rng);
    const MatrixFamily v = MatrixFamily::haar(dual, rng);
    EXPECT_TRUE(u.unitary());
    EXPECT_LE(l2_invariance_check(f, u), 1e-10 * ell2_norm(f));

    MatrixFamily phases(dual), vu(dual);
    for (std::size_t k = 0; k < dual->size(); ++k) {
      VectorC p(dual->irrep(k).n());
      for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = std::polar(1.0, 6.0 * rng.uniform());
      phases.set(k, MatrixC(p.asDiagonal()));
      vu.set(k, v.at(k) * u.at(k));
    }
    EXPECT_LE(l2_invariance_check(f, phases), 1e-12 * ell2_norm(f));
    EXPECT_LE(ell_infty_norm(randomize(randomize(f, u), v) - randomize(f, vu)), 1e-12);
  }
}

TEST(Randomize, Errors) {
  const DualPtr dual = make_su2_dual(2);
  Rng rng(26, 0);
  const FourierCoeffs f = random_coeffs(dual, rng);
  MatrixFamily partial(dual);
  partial.set(0, MatrixC::Identity(1, 1));
  EXPECT_THROW(randomize(f, partial), std::out_of_range);
  EXPECT_THROW(randomize(f, MatrixFamily::identity(make_su2_dual(3))), std::invalid_argument);
  EXPECT_THROW(l2_invariance_check(f, MatrixFamily::scalar(dual, 0.5)), std::invalid_argument);
}

TEST(FourUnitary, IdentityAndZero) {
  const MatrixC id = MatrixC::Identity(3, 3);
  const auto v = four_unitary_decomposition(id);
  EXPECT_LE((v[0] - id).norm(), 1e-15);
  EXPECT_LE((v[1] - id).norm(), 1e-15);
  EXPECT_LE((v[2] + id).norm(), 1e-15);
  EXPECT_LE((v[3] - id).norm(), 1e-15);

  const MatrixC zero = MatrixC::Zero(2, 2);
  const cd i(0.0, 1.0);
  const auto w = four_unitary_decomposition(zero);
  const MatrixC id2 = MatrixC::Identity(2, 2);
  EXPECT_LE((w[0] - i * id2).norm(), 1e-15);
  EXPECT_LE((w[1] + i * id2).norm(), 1e-15);
  EXPECT_LE((w[2] + id2).norm(), 1e-15);
  EXPECT_LE((w[3] - id2).norm(), 1e-15);
  EXPECT_LE(((w[0] + w[1] + w[2] + w[3]) / 2.0).norm(), 1e-15);
}

TEST(FourUnitary, ScalarIdentityAtOneByOne) {
  // x = a + ib on the closed disc: (a + i sqrt(1-a^2)) + (a - i sqrt(1-a^2))
  // + i(b + i sqrt(1-b^2)) + i(b - i sqrt(1-b^2)) = 2a + 2ib.
  Rng rng(27, 0);
  for (int t = 0; t < 200; ++t) {
    const cd x = std::polar(std::sqrt(rng.uniform()), 6.283185307179586 * rng.uniform());
    const auto v = four_unitary_decomposition(MatrixC::Constant(1, 1, x));
    const double a = x.real(), b = x.imag();
    EXPECT_NEAR(std::abs(v[0](0, 0) - cd(a, std::sqrt(1 - a * a))), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(v[3](0, 0) - cd(0.0, 1.0) * cd(b, -std::sqrt(1 - b * b))), 0.0, 1e-14);
  }
}

TEST(FourUnitary, RandomContractions) {
  Rng rng(28, 0);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 16;
    MatrixC x = random_contraction(n, rng);
    if (t % 7 == 0) x /= spectral_norm(x);
    ASSERT_LE(spectral_norm(x), 1.0 + 1e-12);
    const auto v = four_unitary_decomposition(x);
    EXPECT_LE(spectral_norm(MatrixC((v[0] + v[1] + v[2] + v[3]) / 2.0 - x)), 1e-9);
    for (const auto& m : v) EXPECT_LE(unitarity_defect(m), 1e-9);
  }
  EXPECT_THROW(four_unitary_decomposition(MatrixC::Identity(2, 2) * 1.01), std::domain_error);
}

TEST(BallRandomization, Cases) {
  Rng rng(29, 0);
  const DualPtr dual = make_suq2_dual(0.5, 4);
  const FourierCoeffs f = random_coeffs(dual, rng);

  const BallRandomization zero = randomize_ball(f, MatrixFamily::scalar(dual, 0.0));
  EXPECT_EQ(ell_infty_norm(zero.f_b), 0.0);
  EXPECT_LE(ell_infty_norm(zero.reconstructed), 1e-12);

  const BallRandomization half = randomize_ball(f, MatrixFamily::scalar(dual, 0.5));
  EXPECT_LE(ell_infty_norm(half.f_b - f.scaled(0.5)), 1e-12);
  EXPECT_LE(half.deviation, 1e-12);

  const BallRandomization unit = randomize_ball(f, MatrixFamily::haar(dual, rng));
  EXPECT_LE(unit.deviation, 1e-9);
  for (const auto& fam : unit.unitaries) EXPECT_TRUE(fam.unitary());

  for (int t = 0; t < 50; ++t) {
    const BallRandomization r = randomize_ball(f, random_ball_family(dual, rng));
    EXPECT_LE(r.deviation, 1e-9);
    EXPECT_LE(ell_infty_norm(r.f_b - r.reconstructed), 1e-9);
  }
  EXPECT_THROW(randomize_ball(f, MatrixFamily::scalar(dual, 1.1)), std::domain_error);
}
