#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "polyspec/families.hpp"
#include "polyspec/noise.hpp"
#include "test_support.hpp"

using namespace polyspec;

namespace {

// |estimate - target| within four standard errors of a Bernoulli mean.
void expect_within_4sigma(double hits, double samples, double target, const char* what) {
  const double est = hits / samples;
  const double sigma = std::sqrt(target * (1.0 - target) / samples);
  EXPECT_LE(std::abs(est - target), 4.0 * sigma) << what << ": estimate " << est << " target " << target;
}

}  // namespace

TEST(DownwardNoise, AndIsAnEigenfunction) {
  for (double rho : {0.3, 0.5, 0.7}) {
    for (PointIndex s = 0; s < 16; ++s) {
      const BooleanFunction f = make_and(4, s);
      const BoundedFunction tf = downward_noise(f, rho);
      EXPECT_LT(linf_distance(tf.table(), scaled(f.table(), std::pow(rho, std::popcount(s)))), 1e-15);
    }
  }
}

TEST(DownwardNoise, XorMapsToHalfOr) {
  const BoundedFunction t = downward_noise(make_xor(2, 0b11), 0.5);
  EXPECT_LT(linf_distance(t.table(), scaled(make_or(2, 0b11).table(), 0.5)), 1e-15);
}

TEST(DownwardNoise, FixesConstants) {
  for (double rho : {0.1, 0.5, 0.9}) {
    const BoundedFunction t = downward_noise(BoundedFunction::constant(5, 0.42), rho);
    for (double v : t.values()) EXPECT_NEAR(v, 0.42, 1e-15);
  }
}

TEST(DownwardNoise, MatchesBothDefinitions) {
  RngStream rng(31);
  for (double rho : {0.25, 0.5, 0.8}) {
    for (int n = 1; n <= 7; ++n) {
      const BoundedFunction f = oracle::random_bounded(n, rng);
      const BoundedFunction t = downward_noise(f, rho);
      EXPECT_LT(oracle::max_abs_diff(t.values(), oracle::downward(f, n, rho)), 1e-12);
      EXPECT_LT(oracle::max_abs_diff(t.values(), oracle::downward_by_masks(f, n, rho)), 1e-12);
    }
  }
}

TEST(DownwardNoise, ContractionInL1) {
  RngStream rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = 0.1 + 0.8 * rng.uniform();
    const double rho = 0.1 + 0.8 * rng.uniform();
    const BoundedFunction f = oracle::random_bounded(6, rng);
    const BoundedFunction g = oracle::random_bounded(6, rng);
    // T carries functions on mu_{rho p} to functions on mu_p.
    EXPECT_LE(l1_distance(downward_noise(f, rho), downward_noise(g, rho), p), l1_distance(f, g, rho * p) + 1e-12);
  }
}

TEST(IteratedNoise, WorkedExamples) {
  RngStream rng(33);
  const BoundedFunction f = oracle::random_bounded(5, rng);
  EXPECT_EQ(iterated_noise(f, 0.4, 2), downward_noise(f, 0.4));
  for (PointIndex s : {0u, 1u, 5u, 7u}) {
    const BooleanFunction a = make_and(3, s);
    const BoundedFunction t = iterated_noise(a, 0.5, 3);
    EXPECT_LT(linf_distance(t.table(), scaled(a.table(), std::pow(0.25, std::popcount(s)))), 1e-15);
  }
  const BoundedFunction c = iterated_noise(BoundedFunction::constant(3, 0.6), 0.3, 5);
  for (double v : c.values()) EXPECT_NEAR(v, 0.6, 1e-15);
  EXPECT_THROW(iterated_noise(f, 0.5, 1), std::invalid_argument);
}

TEST(IteratedNoise, MatchesComposedMasks) {
  // T^(m) f(x) = E f(x AND y_1 AND ... AND y_{m-1}) enumerated over all masks.
  RngStream rng(34);
  const int n = 3;
  const double rho = 0.6;
  const BoundedFunction f = oracle::random_bounded(n, rng);
  const BoundedFunction t = iterated_noise(f, rho, 3);
  for (PointIndex x = 0; x < 8; ++x) {
    double e = 0.0;
    for (PointIndex y1 = 0; y1 < 8; ++y1) {
      for (PointIndex y2 = 0; y2 < 8; ++y2) e += oracle::mu(n, rho, y1) * oracle::mu(n, rho, y2) * f(x & y1 & y2);
    }
    EXPECT_NEAR(t(x), e, 1e-14);
  }
}

TEST(InvertDownward, RoundTripsBothWays) {
  RngStream rng(35);
  for (double rho : {0.5, 0.75}) {
    for (int n : {1, 4, 8, 12}) {
      const RealTable f = oracle::random_real(n, rng);
      EXPECT_LT(linf_distance(invert_downward(downward_noise(f, rho), rho), f), 1e-9);
      EXPECT_LT(linf_distance(downward_noise(invert_downward(f, rho), rho), f), 1e-9);
    }
  }
}

TEST(InvertDownward, DyadicRoundTripIsExactOnBooleanInputs) {
  RngStream rng(36);
  for (double rho : {0.25, 0.5, 0.75}) {
    for (int n : {1, 6, 12}) {
      const BooleanFunction g = oracle::random_boolean(n, rng);
      EXPECT_EQ(linf_distance(invert_downward(downward_noise(g, rho), rho), g.table()), 0.0);
    }
  }
}

TEST(InvertDownward, RoundTripErrorWithinConditioning) {
  // The inverse has infinity norm ((2 - rho) / rho)^n, which scales a rounding of Tf.
  RngStream rng(37);
  const double rho = 0.25;
  for (int n : {1, 4, 8, 12}) {
    const RealTable f = oracle::random_real(n, rng);
    const double bound = 2.0 * n * std::numeric_limits<double>::epsilon() * std::pow((2.0 - rho) / rho, n);
    EXPECT_LE(linf_distance(invert_downward(downward_noise(f, rho), rho), f), bound) << "n=" << n;
    if (n <= 8) {
      EXPECT_LT(linf_distance(invert_downward(downward_noise(f, rho), rho), f), 1e-9) << "n=" << n;
    }
  }
}

TEST(InvertDownward, MatchesClosedFormAtHalf) {
  RngStream rng(36);
  for (int n = 0; n <= 6; ++n) {
    const BooleanFunction h = oracle::random_boolean(n, rng);
    const RealTable inv = invert_downward(h, 0.5);
    const auto closed = oracle::inverse_half(h, n);
    // Both sides are small integer combinations, so they agree exactly.
    for (PointIndex b = 0; b < inv.size(); ++b) EXPECT_EQ(inv[b], closed[b]) << "B=" << b;
  }
}

TEST(InvertDownward, MatchesTriangularSolve) {
  RngStream rng(37);
  for (double rho : {0.2, 0.25, 0.6}) {
    for (int n = 1; n <= 6; ++n) {
      const BoundedFunction h = oracle::random_bounded(n, rng);
      EXPECT_LT(oracle::max_abs_diff(invert_downward(h, rho).values(), oracle::inverse_triangular(h, n, rho)), 1e-8);
    }
  }
}

TEST(InvertDownward, OrAtQuarterIsNegativeAtTop) {
  const RealTable u = invert_downward(make_or(2, 0b11), 0.25);
  const double rho = 0.25;
  EXPECT_NEAR(u[3], (2 * rho - 1) / (rho * rho), 1e-12);
  EXPECT_LT(u[3], 0.0);
  EXPECT_NEAR(u[1], 4.0, 1e-12);
  EXPECT_NEAR(u[2], 4.0, 1e-12);
  EXPECT_EQ(u[0], 0.0);
}

TEST(InvertDownward, ScaledAndOrGivesAndXor) {
  RngStream rng(38);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const BlockPartition part = oracle::random_partition(n, 3, rng);
    const double lambda = 0.1 + 0.5 * rng.uniform();
    const RealTable u = invert_downward(scaled(make_and_or(n, part).table(), lambda), 0.5);
    const RealTable target = scaled(make_and_xor(n, part).table(), std::ldexp(lambda, part.width()));
    EXPECT_LT(linf_distance(u, target), 1e-12) << part.to_string();
  }
}

TEST(SpectralAction, AgreesWithDirectOperator) {
  RngStream rng(39);
  for (double p : {0.3, 0.5, 0.7}) {
    for (double rho : {0.3, 0.5, 0.7}) {
      const BoundedFunction f = oracle::random_bounded(7, rng);
      EXPECT_LT(spectral_action_check(f, p, rho), 1e-9);
    }
  }
  EXPECT_LT(spectral_action_check(BoundedFunction::constant(4, 0.8), 0.4, 0.6), 1e-15);
}

TEST(SpectralAction, DictatorLevelOneFactor) {
  EXPECT_NEAR(std::sqrt(spectral_action_factor(0.5, 0.5)), std::sqrt(1.0 / 3.0), 1e-15);
  // T x0 = rho x0, and the coefficient ratio at level one is the factor's square root.
  const double p = 0.5, rho = 0.5;
  const Spectrum low = fourier_transform(make_dictator(1, 0), rho * p);
  const Spectrum high = fourier_transform(downward_noise(make_dictator(1, 0), rho), p);
  EXPECT_NEAR(high[1] / low[1], std::sqrt(1.0 / 3.0), 1e-12);
}

TEST(Samplers, CoupledMarginalsAndDominance) {
  RngStream rng = RngStream(40).split("coupled");
  const NoiseParams prm{0.6, 0.5};
  const int n = 4;
  const std::uint64_t samples = 200'000;
  std::vector<double> ones_y(n), ones_x(n);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const CoupledSample s = sample_coupled(n, prm, rng);
    ASSERT_EQ(s.y & ~s.x, 0u);
    for (int i = 0; i < n; ++i) {
      ones_y[i] += (s.y >> i) & 1u;
      ones_x[i] += (s.x >> i) & 1u;
    }
  }
  for (int i = 0; i < n; ++i) {
    expect_within_4sigma(ones_y[i], samples, prm.lower_bias(), "y marginal");
    expect_within_4sigma(ones_x[i], samples, prm.p, "x marginal");
  }
}

TEST(Samplers, DnuRejectsBadNu) {
  RngStream rng(41);
  EXPECT_THROW(sample_dnu(3, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(sample_dnu(3, 1.0, rng), std::invalid_argument);
}

TEST(NoiseSensitivity, WorkedExamples) {
  for (double nu : {0.05, 0.1, 0.3}) {
    EXPECT_NEAR(noise_sensitivity_exact(BooleanFunction::constant(4, true), 0.5, nu).estimate, 0.0, 1e-15);
    EXPECT_NEAR(noise_sensitivity_exact(make_dictator(3, 1), 0.5, nu).estimate, nu / 2, 1e-15);
    EXPECT_NEAR(noise_sensitivity_exact(make_dictator(3, 1), 0.3, nu).estimate, 2 * nu * 0.3 * 0.7, 1e-15);
  }
}

TEST(NoiseSensitivity, ExactMatchesPairEnumeration) {
  RngStream rng(42);
  for (double p : {0.3, 0.5}) {
    for (double nu : {0.1, 0.4}) {
      const BooleanFunction g = oracle::random_boolean(5, rng);
      EXPECT_NEAR(noise_sensitivity_exact(g, p, nu).estimate, oracle::noise_sensitivity(g, p, nu), 1e-12);
    }
  }
}

TEST(NoiseSensitivity, MonotoneInNu) {
  RngStream rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const BooleanFunction g = oracle::random_boolean(6, rng);
    double prev = 0.0;
    for (double nu : {0.01, 0.05, 0.1, 0.2, 0.5, 0.9}) {
      const double v = noise_sensitivity_exact(g, 0.5, nu).estimate;
      EXPECT_GE(v, prev - 1e-15);
      prev = v;
    }
  }
}

TEST(NoiseSensitivity, MonteCarloIsSeededAndReportsError) {
  const BooleanFunction g = make_majority(3, 0b111);
  const TesterReport a = noise_sensitivity(g, 0.5, 0.2, EstimateMode::montecarlo, 50'000, 7);
  const TesterReport b = noise_sensitivity(g, 0.5, 0.2, EstimateMode::montecarlo, 50'000, 7);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_FALSE(a.exact);
  EXPECT_GT(a.std_error, 0.0);
  EXPECT_EQ(a.samples, 50'000u);
  const TesterReport e = noise_sensitivity(g, 0.5, 0.2, EstimateMode::exact);
  EXPECT_TRUE(e.exact);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_LE(std::abs(a.estimate - e.estimate), 4 * a.std_error);
}

TEST(Residual, WorkedExamples) {
  for (double rho : {0.3, 0.5}) {
    const BooleanFunction a = make_and(4, 0b0110);
    EXPECT_NEAR(residual(a, a, NoiseParams{0.5, rho, rho * rho}), 0.0, 1e-15);
  }
  const NoiseParams prm{0.4, 0.5, 0.3};
  EXPECT_NEAR(residual(BooleanFunction(3), BooleanFunction::constant(3, true), prm), 0.3, 1e-15);
  EXPECT_THROW(residual(BooleanFunction(3), BooleanFunction(2), prm), std::invalid_argument);
}

TEST(NoiseParams, Validation) {
  EXPECT_NO_THROW((NoiseParams{0.5, 0.5, 1.0, 0.1}.validate()));
  EXPECT_THROW((NoiseParams{0.0, 0.5}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseParams{0.5, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseParams{0.5, 0.5, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseParams{0.5, 0.5, 0.5, 1.5}.validate()), std::invalid_argument);
  EXPECT_NEAR((NoiseParams{0.5, 0.5, 1.0, 0.1}.theta()), 0.1 / 2.1, 1e-15);
}
