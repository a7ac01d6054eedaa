#pragma once

// ANDs, AND-ORs, AND-XORs over disjoint blocks, minterms, recognition of
// AND-OR structure, truncation of wide ORs, and the weight-threshold
// counterexample functions.

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyspec/core.hpp"
#include "polyspec/influences.hpp"
#include "polyspec/rng.hpp"

namespace polyspec {

// Ordered sequence of disjoint nonempty coordinate blocks A_1..A_m.
class BlockPartition {
 public:
  BlockPartition() = default;

  explicit BlockPartition(std::vector<PointIndex> blocks) : blocks_(std::move(blocks)) {
    PointIndex seen = 0;
    for (PointIndex b : blocks_) {
      if (b == 0) throw std::invalid_argument("BlockPartition: empty block");
      if (seen & b) throw std::invalid_argument("BlockPartition: overlapping blocks");
      seen |= b;
    }
  }

  // "0,1;2" -> {{0,1},{2}}. An empty string is the width-0 partition.
  static BlockPartition parse(std::string_view text) {
    std::vector<PointIndex> blocks;
    std::string s(text);
    if (s.find_first_not_of(" \t") == std::string::npos) return BlockPartition();
    std::stringstream all(s);
    std::string block;
    while (std::getline(all, block, ';')) {
      PointIndex mask = 0;
      std::stringstream items(block);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        const int c = std::stoi(item, &used);
        if (c < 0 || c >= kMaxBooleanDim) throw std::invalid_argument("block coordinate out of range: " + item);
        const PointIndex bit = PointIndex{1} << c;
        if (mask & bit) throw std::invalid_argument("coordinate repeated within block: " + item);
        mask |= bit;
      }
      blocks.push_back(mask);
    }
    return BlockPartition(std::move(blocks));
  }

  int width() const { return static_cast<int>(blocks_.size()); }
  const std::vector<PointIndex>& blocks() const { return blocks_; }

  PointIndex support() const {
    PointIndex s = 0;
    for (PointIndex b : blocks_) s |= b;
    return s;
  }

  int max_block_size() const {
    int m = 0;
    for (PointIndex b : blocks_) m = std::max(m, std::popcount(b));
    return m;
  }

  // Blocks ordered by their smallest coordinate; equal partitions normalize identically.
  BlockPartition normalized() const {
    std::vector<PointIndex> b = blocks_;
    std::sort(b.begin(), b.end(), [](PointIndex l, PointIndex r) { return std::countr_zero(l) < std::countr_zero(r); });
    return BlockPartition(std::move(b));
  }

  bool same_blocks(const BlockPartition& other) const { return normalized().blocks_ == other.normalized().blocks_; }

  void validate(int n) const {
    if ((support() & ~full_mask(n)) != 0) throw std::invalid_argument("BlockPartition: coordinate beyond dimension");
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k) out += ';';
      bool first = true;
      for (int c : mask_to_coords(blocks_[k])) {
        if (!first) out += ',';
        out += std::to_string(c);
        first = false;
      }
    }
    return out;
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<PointIndex> blocks_;
};

inline bool and_or_value(const BlockPartition& part, PointIndex x) {
  for (PointIndex b : part.blocks()) {
    if ((x & b) == 0) return false;
  }
  return true;
}

inline bool and_xor_value(const BlockPartition& part, PointIndex x) {
  for (PointIndex b : part.blocks()) {
    if ((std::popcount(x & b) & 1) == 0) return false;
  }
  return true;
}

inline void check_set(int n, PointIndex s) {
  if ((s & ~full_mask(n)) != 0) throw std::invalid_argument("coordinate set beyond dimension");
}

inline BooleanFunction make_and(int n, PointIndex s) {
  check_set(n, s);
  return BooleanFunction::from_predicate(n, [s](PointIndex x) { return (x & s) == s; });
}

inline BooleanFunction make_or(int n, PointIndex s) {
  check_set(n, s);
  return BooleanFunction::from_predicate(n, [s](PointIndex x) { return (x & s) != 0; });
}

inline BooleanFunction make_xor(int n, PointIndex s) {
  check_set(n, s);
  return BooleanFunction::from_predicate(n, [s](PointIndex x) { return (std::popcount(x & s) & 1) != 0; });
}

inline BooleanFunction make_dictator(int n, int i) { return make_and(n, PointIndex{1} << i); }

// Majority over an odd-size coordinate set.
inline BooleanFunction make_majority(int n, PointIndex s) {
  check_set(n, s);
  const int k = std::popcount(s);
  if (k % 2 == 0) throw std::invalid_argument("majority needs an odd number of coordinates");
  return BooleanFunction::from_predicate(n, [s, k](PointIndex x) { return 2 * std::popcount(x & s) > k; });
}

inline BooleanFunction make_and_or(int n, const BlockPartition& part) {
  part.validate(n);
  return BooleanFunction::from_predicate(n, [&](PointIndex x) { return and_or_value(part, x); });
}

inline BooleanFunction make_and_xor(int n, const BlockPartition& part) {
  part.validate(n);
  return BooleanFunction::from_predicate(n, [&](PointIndex x) { return and_xor_value(part, x); });
}

// Minimal sets M with g(M) = 1, ordered by (size, index). Requires monotone g.
inline std::vector<PointIndex> minterms(const BooleanFunction& g) {
  if (!is_monotone(g)) throw std::invalid_argument("minterms: function is not monotone");
  std::vector<PointIndex> out;
  for (PointIndex x = 0; x < g.size(); ++x) {
    if (!g(x)) continue;
    bool minimal = true;
    for (PointIndex m = x; m != 0 && minimal; m &= m - 1) minimal = !g(x & ~(m & (~m + 1)));
    if (minimal) out.push_back(x);
  }
  std::stable_sort(out.begin(), out.end(), [](PointIndex a, PointIndex b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

// Recovers the partition of an AND-OR function from its minterm hypergraph.
//
// Fix a minterm B = {b_1..b_m} and color b_i with i. Any other coordinate v
// is colored i when (B \ {b_i}) + v is a minterm; a coordinate admitting two
// colors rules out AND-OR structure, and uncolored coordinates must be
// irrelevant. Color classes are the candidate blocks; the candidate is
// accepted only if its truth table equals g. The zero function and
// non-monotone functions yield nullopt; the constant 1 yields width 0.
inline std::optional<BlockPartition> recognize_and_or(const BooleanFunction& g) {
  if (g.is_zero() || !is_monotone(g)) return std::nullopt;
  if (g(0)) return BlockPartition();
  const std::vector<PointIndex> mins = minterms(g);
  const int m = std::popcount(mins.front());
  for (PointIndex t : mins) {
    if (std::popcount(t) != m) return std::nullopt;
  }
  const PointIndex base = mins.front();
  const std::vector<int> base_coords = mask_to_coords(base);
  std::vector<PointIndex> blocks(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) blocks[i] = PointIndex{1} << base_coords[i];
  for (int v = 0; v < g.dimension(); ++v) {
    const PointIndex vb = PointIndex{1} << v;
    if (base & vb) continue;
    int color = -1;
    for (int i = 0; i < m; ++i) {
      const PointIndex candidate = (base & ~(PointIndex{1} << base_coords[i])) | vb;
      if (g(candidate)) {
        if (color != -1) return std::nullopt;
        color = i;
      }
    }
    if (color != -1) blocks[color] |= vb;
  }
  BlockPartition part(std::move(blocks));
  if (make_and_or(g.dimension(), part) != g) return std::nullopt;
  return part;
}

// Drops every block with more than `cap` coordinates.
inline BlockPartition truncate_wide_ors(const BlockPartition& part, int cap) {
  if (cap < 1) throw std::invalid_argument("truncate_wide_ors: cap must be at least 1");
  std::vector<PointIndex> kept;
  for (PointIndex b : part.blocks()) {
    if (std::popcount(b) <= cap) kept.push_back(b);
  }
  return BlockPartition(std::move(kept));
}

// Largest block size whose all-zero probability (1-p)^size stays at least gamma.
inline int truncation_cap(double p, double gamma) {
  check_bias(p, "p");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("truncation_cap: gamma must lie in (0,1)");
  return static_cast<int>(std::floor(std::log(1.0 / gamma) / std::log(1.0 / (1.0 - p)) + 1e-12));
}

// Weight threshold ceil(n/3) shared by f1 and f2.
inline int third_threshold(int n) { return (n + 2) / 3; }

// x0 OR x1 on inputs of weight >= n/3, x0 XOR x1 below.
inline BooleanFunction make_f1(int n) {
  if (n < 2) throw std::invalid_argument("make_f1: needs n >= 2");
  const int t = third_threshold(n);
  return BooleanFunction::from_predicate(n, [t](PointIndex x) {
    const bool a = x & 1u, b = x & 2u;
    return std::popcount(x) >= t ? (a || b) : (a != b);
  });
}

// 1 on inputs of weight >= n/3, independent Bernoulli(lambda) below.
inline BooleanFunction make_f2(int n, double lambda, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("make_f2: needs n >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("make_f2: lambda must lie in [0,1]");
  const int t = third_threshold(n);
  return BooleanFunction::from_predicate(n, [&](PointIndex x) { return std::popcount(x) >= t || rng.bernoulli(lambda); });
}

struct WeightWindow {
  int lo = 0;
  int hi = 0;
  bool contains(PointIndex x) const {
    const int w = std::popcount(x);
    return w >= lo && w <= hi;
  }
};

// Weights floor(n/2 -/+ c sqrt(n ln n)).
inline WeightWindow middle_window(int n, double c = 1.0) {
  const double half_width = n > 1 ? c * std::sqrt(n * std::log(static_cast<double>(n))) : 0.0;
  return {static_cast<int>(std::floor(n / 2.0 - half_width)), static_cast<int>(std::floor(n / 2.0 + half_width))};
}

// x0 OR x1 inside the middle window, x0 XOR x1 elsewhere.
inline BooleanFunction make_midslice(int n, double c = 1.0) {
  if (n < 2) throw std::invalid_argument("make_midslice: needs n >= 2");
  const WeightWindow win = middle_window(n, c);
  return BooleanFunction::from_predicate(n, [win](PointIndex x) {
    const bool a = x & 1u, b = x & 2u;
    return win.contains(x) ? (a || b) : (a != b);
  });
}

// 1 inside the middle window, Bernoulli(lambda) elsewhere.
inline BooleanFunction make_midslice_bernoulli(int n, double lambda, RngStream& rng, double c = 1.0) {
  const WeightWindow win = middle_window(n, c);
  return BooleanFunction::from_predicate(n, [&](PointIndex x) { return win.contains(x) || rng.bernoulli(lambda); });
}

}  // namespace polyspec
