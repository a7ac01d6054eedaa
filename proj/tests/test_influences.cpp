#include <gtest/gtest.h>

#include <cmath>

#include "polyspec/families.hpp"
#include "polyspec/influences.hpp"
#include "test_support.hpp"

using namespace polyspec;

namespace {

BooleanFunction negated_dictator() {
  return BooleanFunction::from_predicate(1, [](PointIndex x) { return x == 0; });
}

}  // namespace

TEST(Influence, WorkedExamples) {
  for (double p : {0.2, 0.5, 0.7}) {
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(influence(make_dictator(3, i), i, p), 1.0, 1e-15);
    EXPECT_EQ(negative_influence(make_majority(3, 0b111), 1, p), 0.0);
    EXPECT_NEAR(negative_influence(negated_dictator(), 0, p), 1.0, 1e-15);
  }
  EXPECT_THROW(influence(make_dictator(3, 0), 3, 0.5), std::out_of_range);
}

TEST(Influence, MatchesDirectSums) {
  RngStream rng(51);
  for (double p : {0.3, 0.5, 0.8}) {
    const BoundedFunction f = oracle::random_bounded(6, rng);
    for (int i = 0; i < 6; ++i) {
      EXPECT_NEAR(influence(f, i, p), oracle::influence(f, 6, i, p), 1e-12);
      EXPECT_NEAR(negative_influence(f, i, p), oracle::negative_influence(f, 6, i, p), 1e-12);
    }
  }
}

TEST(Influence, FourierIdentity) {
  // I_i = sum over S containing i of f^(S)^2 / (p(1-p)).
  RngStream rng(52);
  for (double p : {0.3, 0.5, 0.7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const BooleanFunction f = oracle::random_boolean(8, rng);
      const Spectrum s = fourier_transform(f, p);
      for (int i = 0; i < 8; ++i) {
        EXPECT_NEAR(influence(f, i, p), set_influence(s, PointIndex{1} << i) / (p * (1 - p)), 1e-9);
      }
    }
  }
}

TEST(Influence, MonotoneIffNoNegativeInfluence) {
  RngStream rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const BooleanFunction f = oracle::random_boolean(3, rng, 0.3 + 0.4 * rng.uniform());
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double v = negative_influence(f, i, 0.4);
      EXPECT_GE(v, 0.0);
      EXPECT_GE(influence(f, i, 0.4), 0.0);
      total += v;
    }
    EXPECT_EQ(total == 0.0, oracle::monotone(f));
    EXPECT_EQ(is_monotone(f), oracle::monotone(f));
  }
}

TEST(Sensitivity, WorkedExamples) {
  for (int n : {1, 4, 7}) {
    const BooleanFunction x = make_xor(n, full_mask(n));
    EXPECT_EQ(sensitivity(x), n);
    EXPECT_EQ(degree(x), n);
  }
  for (PointIndex s : {0u, 1u, 6u, 15u}) {
    const BooleanFunction a = make_and(4, s);
    EXPECT_EQ(sensitivity(a), std::popcount(s));
    EXPECT_EQ(sensitivity_at(a, s), std::popcount(s));
    EXPECT_EQ(degree(a), std::popcount(s));
  }
}

TEST(Sensitivity, MatchesOraclesAndIsBiasFreeDegree) {
  RngStream rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const BooleanFunction f = oracle::random_boolean(n, rng);
    EXPECT_EQ(sensitivity(f), oracle::sensitivity(f));
    EXPECT_EQ(degree(f), oracle::degree(f));
    EXPECT_EQ(degree(f, 1.0 / 3.0), degree(f));
  }
}

TEST(Sensitivity, HuangBoundOnRandomFunctions) {
  RngStream rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const BooleanFunction f = oracle::random_boolean(10, rng, rng.uniform());
    EXPECT_GE(static_cast<double>(sensitivity(f)), std::sqrt(static_cast<double>(degree(f))));
  }
}

TEST(Profile, CollectsAllMeasures) {
  const InfluenceProfile prof = profile(make_and(3, 0b011), 0.5);
  ASSERT_EQ(prof.influence.size(), 3u);
  EXPECT_NEAR(prof.influence[0], 0.5, 1e-15);
  EXPECT_NEAR(prof.influence[2], 0.0, 1e-15);
  EXPECT_EQ(prof.sensitivity, 2);
  EXPECT_EQ(prof.degree, 2);
  EXPECT_FALSE(profile(BoundedFunction::constant(2, 0.5), 0.5).sensitivity.has_value());
}

TEST(Shift, WorkedExamples) {
  const BooleanFunction maj = make_majority(5, 0b10101);
  EXPECT_EQ(monotonize(maj), maj);
  EXPECT_EQ(shift(negated_dictator(), 0), make_dictator(1, 0));
}

TEST(Shift, MonotonizeIsMonotoneAndIdempotent) {
  RngStream rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const BooleanFunction f = oracle::random_boolean(n, rng);
    const BooleanFunction m = monotonize(f);
    EXPECT_TRUE(oracle::monotone(m));
    EXPECT_EQ(monotonize(m), m);
    EXPECT_EQ(m.count_ones(), f.count_ones()) << "shifting permutes values";
    const BoundedFunction g = oracle::random_bounded(n, rng);
    EXPECT_TRUE(oracle::monotone_table(monotonize(g), n));
  }
}

TEST(Shift, ClaimBoundsOnRandomFunctions) {
  RngStream rng(57);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const double p = 0.2 + 0.6 * rng.uniform();
    const BoundedFunction f = oracle::random_bounded(n, rng);
    for (int i = 0; i < n; ++i) {
      const BoundedFunction s = shift(f, i);
      EXPECT_LE(l1_distance(s, f, p), negative_influence(f, i, p) + 1e-12);
      EXPECT_EQ(negative_influence(s, i, p), 0.0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        EXPECT_LE(negative_influence(s, j, p), negative_influence(f, j, p) / (p * (1 - p)) + 1e-12);
      }
    }
    const double bound = std::pow((1 - p) * p, -n) * n * max_negative_influence(f, p);
    EXPECT_LE(l1_distance(f, monotonize(f), p), bound + 1e-12);
  }
}

TEST(JuntaProject, WorkedExamples) {
  RngStream rng(58);
  const BooleanFunction j = make_majority(5, 0b01011);
  EXPECT_LT(linf_distance(junta_project(j, 0b01011, 0.3).table(), j.table()), 1e-12);
  EXPECT_EQ(junta_project_rounded(j, 0b01011, 0.3), j);
  for (double p : {0.3, 0.6}) {
    const BooleanFunction r = junta_project_rounded(make_dictator(3, 0), 0, p);
    EXPECT_EQ(r, BooleanFunction::constant(3, p >= 0.5));
  }
}

TEST(JuntaProject, AveragingDoesNotRaiseNegativeInfluence) {
  RngStream rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const double p = 0.2 + 0.6 * rng.uniform();
    const BooleanFunction f = oracle::random_boolean(n, rng);
    const PointIndex kept = static_cast<PointIndex>(rng()) & full_mask(n);
    const BoundedFunction h = junta_project(f, kept, p);
    for (int j : mask_to_coords(kept)) EXPECT_LE(negative_influence(h, j, p), negative_influence(f, j, p) + 1e-12);
    for (int j = 0; j < n; ++j) {
      if (kept & (PointIndex{1} << j)) continue;
      EXPECT_NEAR(influence(h, j, p), 0.0, 1e-24);
    }
  }
}

TEST(JuntaProject, IsTheL2Projection) {
  // f - h is orthogonal to every function of the kept coordinates.
  RngStream rng(60);
  const int n = 5;
  const double p = 0.35;
  const BoundedFunction f = oracle::random_bounded(n, rng);
  const PointIndex kept = 0b10010;
  const BoundedFunction h = junta_project(f, kept, p);
  const BiasedMeasure mu(n, p);
  for (PointIndex a = 0; a < 4; ++a) {
    double ip = 0.0;
    for (PointIndex x = 0; x < f.size(); ++x) {
      if (extract_bits(x, kept) == a) ip += mu(x) * (f(x) - h(x));
    }
    EXPECT_NEAR(ip, 0.0, 1e-14);
  }
}
