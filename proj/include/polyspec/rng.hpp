#pragma once

// Seeded, splittable random streams and the Monte Carlo report type.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "polyspec/core.hpp"

namespace polyspec {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a; stable across platforms, unlike std::hash.
inline std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  // Child streams depend only on (parent seed, label), never on how many
  // draws the parent has made.
  RngStream split(std::string_view label) const { return RngStream(splitmix64(seed_ ^ stable_hash(label))); }
  RngStream split(std::uint64_t index) const { return RngStream(splitmix64(seed_ + splitmix64(index + 1))); }

  std::uint64_t seed() const { return seed_; }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform double in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  PointIndex biased_point(int n, double p) {
    PointIndex x = 0;
    for (int i = 0; i < n; ++i) {
      if (bernoulli(p)) x |= PointIndex{1} << i;
    }
    return x;
  }

  PointIndex uniform_point(int n) { return n == 0 ? 0 : static_cast<PointIndex>(engine_() >> (64 - n)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct TesterReport {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool exact = false;

  static TesterReport exact_value(double v) { return {v, 0.0, 0, 0, true}; }

  static TesterReport from_hits(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
    const double n = static_cast<double>(samples);
    const double mean = samples == 0 ? 0.0 : static_cast<double>(hits) / n;
    const double se = samples == 0 ? 0.0 : std::sqrt(mean * (1.0 - mean) / n);
    return {mean, se, samples, seed, false};
  }
};

inline constexpr std::uint64_t kDefaultSamples = 1'000'000;

}  // namespace polyspec
