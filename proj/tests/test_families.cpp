#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "polyspec/families.hpp"
#include "polyspec/noise.hpp"
#include "test_support.hpp"

using namespace polyspec;

TEST(BlockPartition, ParseAndValidate) {
  const BlockPartition p = BlockPartition::parse("0,1;2");
  ASSERT_EQ(p.width(), 2);
  EXPECT_EQ(p.blocks()[0], 0b011u);
  EXPECT_EQ(p.blocks()[1], 0b100u);
  EXPECT_EQ(p.to_string(), "0,1;2");
  EXPECT_EQ(BlockPartition::parse("").width(), 0);
  EXPECT_THROW(BlockPartition::parse("0,1;1"), std::invalid_argument);
  EXPECT_THROW(BlockPartition::parse("0;;1"), std::invalid_argument);
  EXPECT_THROW(BlockPartition::parse("0,0"), std::invalid_argument);
  EXPECT_THROW(BlockPartition::parse("x"), std::invalid_argument);
  EXPECT_THROW(make_and_or(2, BlockPartition::parse("0;2")), std::invalid_argument);
  EXPECT_TRUE(BlockPartition::parse("2;0,1").same_blocks(p));
}

TEST(Constructors, WorkedExamples) {
  EXPECT_EQ(make_and_or(2, BlockPartition({0b01, 0b10})), make_and(2, 0b11));
  EXPECT_EQ(make_and_xor(2, BlockPartition({0b11})), make_xor(2, 0b11));
  EXPECT_EQ(make_and_or(3, BlockPartition()), BooleanFunction::constant(3, true));
  EXPECT_THROW(make_majority(3, 0b11), std::invalid_argument);
  EXPECT_THROW(make_and(2, 0b100), std::invalid_argument);
}

TEST(Constructors, AndXorNoiseIsScaledAndOr) {
  RngStream rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const BlockPartition part = oracle::random_partition(n, 4, rng);
    const BoundedFunction t = downward_noise(make_and_xor(n, part), 0.5);
    const RealTable target = scaled(make_and_or(n, part).table(), std::ldexp(1.0, -part.width()));
    EXPECT_LT(linf_distance(t.table(), target), 1e-12) << part.to_string();
  }
}

TEST(Constructors, MonotonicityOfFamilies) {
  RngStream rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const BlockPartition part = oracle::random_partition(n, 3, rng);
    EXPECT_TRUE(oracle::monotone(make_and_or(n, part)));
    EXPECT_EQ(oracle::monotone(make_and_xor(n, part)), part.max_block_size() <= 1);
  }
}

TEST(Minterms, WorkedExamples) {
  EXPECT_EQ(minterms(make_and(4, 0b1010)), (std::vector<PointIndex>{0b1010}));
  EXPECT_EQ(minterms(make_or(2, 0b11)), (std::vector<PointIndex>{0b01, 0b10}));
  EXPECT_EQ(minterms(make_majority(3, 0b111)), (std::vector<PointIndex>{0b011, 0b101, 0b110}));
  EXPECT_TRUE(minterms(BooleanFunction(3)).empty());
  EXPECT_EQ(minterms(BooleanFunction::constant(3, true)), (std::vector<PointIndex>{0}));
  EXPECT_THROW(minterms(make_xor(2, 0b11)), std::invalid_argument);
}

TEST(Minterms, AndOrMintermsAreTransversals) {
  RngStream rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const BlockPartition part = oracle::random_partition(n, 4, rng);
    const auto mins = minterms(make_and_or(n, part));
    std::size_t expected = 1;
    for (PointIndex b : part.blocks()) expected *= static_cast<std::size_t>(std::popcount(b));
    EXPECT_EQ(mins.size(), expected);
    for (PointIndex m : mins) {
      for (PointIndex b : part.blocks()) EXPECT_EQ(std::popcount(m & b), 1);
      EXPECT_EQ(m & ~part.support(), 0u);
    }
  }
}

TEST(RecognizeAndOr, WorkedExamples) {
  const BlockPartition p = BlockPartition::parse("0,3;1;2,4,5");
  const auto got = recognize_and_or(make_and_or(6, p));
  ASSERT_TRUE(got.has_value());
  EXPECT_TRUE(got->same_blocks(p));
  EXPECT_FALSE(recognize_and_or(make_majority(3, 0b111)).has_value());
  const auto one = recognize_and_or(BooleanFunction::constant(4, true));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->width(), 0);
  EXPECT_FALSE(recognize_and_or(BooleanFunction(3)).has_value());
  EXPECT_FALSE(recognize_and_or(make_xor(2, 0b11)).has_value());
}

TEST(RecognizeAndOr, RoundTripsRandomPartitions) {
  RngStream rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const BlockPartition part = oracle::random_partition(n, 5, rng);
    const BooleanFunction g = make_and_or(n, part);
    const auto got = recognize_and_or(g);
    ASSERT_TRUE(got.has_value()) << part.to_string();
    EXPECT_EQ(make_and_or(n, *got), g);
    EXPECT_TRUE(got->same_blocks(part));
  }
}

TEST(RecognizeAndOr, AgreesWithBruteForceOnAllSmallFunctions) {
  // Every Boolean function on 3 coordinates, plus random monotone ones on 5.
  for (std::uint64_t code = 0; code < 256; ++code) {
    const BooleanFunction g = oracle::from_code(3, code);
    const auto matches = oracle::and_or_matches(g);
    const auto got = recognize_and_or(g);
    ASSERT_EQ(got.has_value(), !matches.empty()) << "code " << code;
    if (got) {
      EXPECT_EQ(make_and_or(3, *got), g);
    }
    EXPECT_LE(matches.size(), 1u) << "AND-OR structure is unique";
  }
  RngStream rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const BooleanFunction g = monotonize(oracle::random_boolean(5, rng, rng.uniform()));
    EXPECT_EQ(recognize_and_or(g).has_value(), !oracle::and_or_matches(g).empty());
  }
}

TEST(TruncateWideOrs, WorkedExamples) {
  const BlockPartition p({0b1, 0b111110});
  const BlockPartition t = truncate_wide_ors(p, 3);
  ASSERT_EQ(t.width(), 1);
  EXPECT_EQ(t.blocks()[0], 0b1u);
  const BlockPartition q = BlockPartition::parse("0,1;2;3,4,5");
  EXPECT_EQ(truncate_wide_ors(q, 3), q);
  EXPECT_THROW(truncate_wide_ors(q, 0), std::invalid_argument);
}

TEST(TruncateWideOrs, DominatesAndStaysClose) {
  RngStream rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const double p = 0.2 + 0.6 * rng.uniform();
    const int cap = 1 + static_cast<int>(rng() % 3);
    const BlockPartition part = oracle::random_partition(n, 4, rng);
    const BooleanFunction g = make_and_or(n, part);
    const BooleanFunction t = make_and_or(n, truncate_wide_ors(part, cap));
    for (PointIndex x = 0; x < g.size(); ++x) EXPECT_GE(t(x), g(x));
    const double gamma = std::pow(1 - p, cap);
    EXPECT_LE(l1_distance(g, t, p), part.width() * gamma + 1e-12);
  }
}

TEST(TruncateWideOrs, CloseAndOrsTruncateIdentically) {
  // Two width-<=d AND-ORs that agree except on blocks wider than the cap.
  RngStream rng(67);
  const double p = 0.5;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 12;
    const BlockPartition narrow = oracle::random_partition(5, 2, rng);
    std::vector<PointIndex> b1 = narrow.blocks(), b2 = narrow.blocks();
    b1.push_back(0b111111u << 5);
    b2.push_back(0b1111111u << 5);
    const BlockPartition g1(b1), g2(b2);
    const int cap = truncation_cap(p, 1.0 / 32);
    EXPECT_EQ(cap, 5);
    EXPECT_LT(l1_distance(make_and_or(n, g1), make_and_or(n, g2), p), 0.05);
    EXPECT_TRUE(truncate_wide_ors(g1, cap).same_blocks(truncate_wide_ors(g2, cap)));
  }
}

TEST(Counterexamples, F1) {
  const BooleanFunction f1 = make_f1(20);
  EXPECT_NEAR(expectation(f1, 0.5), 0.75, 0.05);
  const NoiseParams prm{0.5, 0.5, 0.5};
  const double r12 = residual(make_f1(12), make_f1(12), prm);
  const double r16 = residual(make_f1(16), make_f1(16), prm);
  const double r20 = residual(f1, f1, prm);
  EXPECT_GT(r12, r16);
  EXPECT_GT(r16, r20);
  EXPECT_LT(r20, 0.1);
  EXPECT_EQ(third_threshold(12), 4);
  EXPECT_EQ(third_threshold(20), 7);
}

TEST(Counterexamples, F2) {
  const double lambda = 0.75;
  const NoiseParams prm{0.5, 0.5, lambda};
  double prev = 1.0;
  for (int n : {12, 16, 20}) {
    RngStream rng = RngStream(68).split(static_cast<std::uint64_t>(n));
    const BooleanFunction f2 = make_f2(n, lambda, rng);
    const double r = residual(f2, f2, prm);
    EXPECT_LT(r, prev) << "n=" << n;
    prev = r;
    EXPECT_GT(expectation(f2, 0.5), lambda);
  }
  RngStream a(5), b(5);
  EXPECT_EQ(make_f2(10, 0.3, a), make_f2(10, 0.3, b));
}

TEST(Counterexamples, MiddleSlice) {
  const WeightWindow w = middle_window(16, 1.0);
  const double half = std::sqrt(16 * std::log(16.0));
  EXPECT_EQ(w.lo, static_cast<int>(std::floor(8 - half)));
  EXPECT_EQ(w.hi, static_cast<int>(std::floor(8 + half)));
  const WeightWindow narrow = middle_window(16, 0.25);
  EXPECT_EQ(narrow.lo, 6);
  EXPECT_EQ(narrow.hi, 9);
  const BooleanFunction m = make_midslice(16, 0.25);
  EXPECT_EQ(m(0b111111), true);   // weight 6, inside: x0 OR x1
  EXPECT_EQ(m(0b11), false);      // weight 2, outside: x0 XOR x1
  EXPECT_EQ(m(0b1), true);
  const PointIndex heavy = 0x3FFF;  // weight 14, outside the window, x0 = x1 = 1
  EXPECT_EQ(m(heavy), false);
  RngStream rng(69);
  const BooleanFunction mb = make_midslice_bernoulli(16, 0.4, rng, 0.25);
  EXPECT_TRUE(mb(0b111111));
}
