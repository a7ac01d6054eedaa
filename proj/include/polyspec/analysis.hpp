#pragma once

// Verdict layer: exhaustive eigenfunction classification, exact solutions of
// T f = lambda g, AND-homomorphism testers, and distances to the structured
// families.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyspec/core.hpp"
#include "polyspec/families.hpp"
#include "polyspec/fourier.hpp"
#include "polyspec/influences.hpp"
#include "polyspec/noise.hpp"
#include "polyspec/rng.hpp"

namespace polyspec {

inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kTieTolerance = 1e-12;
inline constexpr int kMaxClassifyDim = 4;
inline constexpr int kMaxExactHomDim = 13;
inline constexpr int kMaxAndSearchDim = 16;
inline constexpr int kMaxPartitionSearchCoords = 10;

// ---------------------------------------------------------------------------
// Exhaustive classification

struct Eigenpair {
  BooleanFunction function;
  std::optional<double> eigenvalue;  // empty for the zero function
};

// Every Boolean f on n <= 4 coordinates with T f = lambda f pointwise.
inline std::vector<Eigenpair> classify_boolean_eigens(int n, double rho) {
  if (n < 0 || n > kMaxClassifyDim) {
    throw std::invalid_argument("classify_boolean_eigens: n must lie in [0, " + std::to_string(kMaxClassifyDim) + "]");
  }
  check_bias(rho, "rho");
  const std::size_t points = cube_size(n);
  const std::uint64_t count = std::uint64_t{1} << points;
  std::vector<Eigenpair> out;
  std::vector<double> tf(points);
  for (std::uint64_t code = 0; code < count; ++code) {
    for (std::size_t x = 0; x < points; ++x) tf[x] = static_cast<double>((code >> x) & 1u);
    apply_downward(tf, n, rho);
    if (code == 0) {
      out.push_back({BooleanFunction(n), std::nullopt});
      continue;
    }
    const auto first_one = static_cast<std::size_t>(std::countr_zero(code));
    const double lambda = tf[first_one];
    if (!(lambda > kEigenTolerance)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < points && ok; ++x) {
      const double fx = static_cast<double>((code >> x) & 1u);
      ok = std::abs(tf[x] - lambda * fx) <= kEigenTolerance;
    }
    if (ok) out.push_back({BooleanFunction::from_words(n, {code}), lambda});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact pairs T f = lambda g

struct ExactPairSolution {
  RealTable inverse;  // T^{-1} g
  RealTable f;        // lambda T^{-1} g
  bool nonnegative = false;
  bool feasible = false;  // f takes values in [0,1]
  std::optional<double> lambda_max;  // feasible lambdas are (0, lambda_max]
  std::optional<BlockPartition> partition;  // AND-OR structure of g, if any
  bool matches_and_xor = false;  // f == 2^r lambda AND-XOR on the partition
};

inline ExactPairSolution solve_exact_pair(const BooleanFunction& g, double rho, double lambda) {
  check_bias(rho, "rho");
  if (!(lambda > 0.0)) throw std::invalid_argument("solve_exact_pair: lambda must be positive");
  ExactPairSolution sol;
  sol.inverse = invert_downward(g, rho);
  sol.f = scaled(sol.inverse, lambda);
  sol.nonnegative = sol.inverse.min() >= -kFeasibilityTolerance;
  sol.feasible = sol.f.min() >= -kFeasibilityTolerance && sol.f.max() <= 1.0 + kFeasibilityTolerance;
  if (sol.nonnegative && !g.is_zero()) sol.lambda_max = 1.0 / sol.inverse.max();
  sol.partition = recognize_and_or(g);
  if (sol.partition) {
    const BooleanFunction phi = make_and_xor(g.dimension(), *sol.partition);
    const RealTable target = scaled(phi.table(), std::ldexp(lambda, sol.partition->width()));
    sol.matches_and_xor = linf_distance(sol.f, target) <= kFeasibilityTolerance;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// AND-homomorphism agreement

namespace detail {

inline void check_same_dimension(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace detail

// Pr_{x ~ mu_p, y ~ mu_rho}[f(x AND y) = g(x) AND h(y)] by full enumeration.
inline double homomorphism_agreement_exact(const BooleanFunction& f, const BooleanFunction& g,
                                           const BooleanFunction& h, double p, double rho) {
  detail::check_same_dimension(f.dimension(), g.dimension(), "homomorphism_agreement");
  detail::check_same_dimension(f.dimension(), h.dimension(), "homomorphism_agreement");
  const int n = f.dimension();
  if (n > kMaxExactHomDim) throw std::invalid_argument("homomorphism_agreement: exact mode limited to n <= 13");
  const BiasedMeasure mu_x(n, p);
  const BiasedMeasure mu_y(n, rho);
  std::vector<double> wy(f.size());
  for (PointIndex y = 0; y < wy.size(); ++y) wy[y] = mu_y(y);
  // On g(x) = 0 the event is f(x AND y) = 0, whose probability is 1 - T f(x).
  const RealTable tf = downward_noise_table(f.table(), rho);
  double total = 0.0;
  for (PointIndex x = 0; x < f.size(); ++x) {
    double inner = 0.0;
    if (!g(x)) {
      inner = 1.0 - tf[x];
    } else {
      for (PointIndex y = 0; y < wy.size(); ++y) {
        if (f(x & y) == h(y)) inner += wy[y];
      }
    }
    total += mu_x(x) * inner;
  }
  return total;
}

inline TesterReport homomorphism_agreement_montecarlo(const BooleanFunction& f, const BooleanFunction& g,
                                                      const BooleanFunction& h, double p, double rho,
                                                      std::uint64_t samples, RngStream rng) {
  detail::check_same_dimension(f.dimension(), g.dimension(), "homomorphism_agreement");
  detail::check_same_dimension(f.dimension(), h.dimension(), "homomorphism_agreement");
  check_bias(p, "p");
  check_bias(rho, "rho");
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const PointIndex x = rng.biased_point(f.dimension(), p);
    const PointIndex y = rng.biased_point(f.dimension(), rho);
    hits += f(x & y) == (g(x) && h(y));
  }
  return TesterReport::from_hits(hits, samples, rng.seed());
}

inline TesterReport homomorphism_agreement(const BooleanFunction& f, const BooleanFunction& g,
                                           const BooleanFunction& h, double p, double rho, EstimateMode mode,
                                           std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  check_bias(p, "p");
  check_bias(rho, "rho");
  if (mode == EstimateMode::exact) return TesterReport::exact_value(homomorphism_agreement_exact(f, g, h, p, rho));
  return homomorphism_agreement_montecarlo(f, g, h, p, rho, samples, RngStream(seed).split("homomorphism"));
}

inline TesterReport homomorphism_agreement(const BooleanFunction& f, double p, double rho, EstimateMode mode,
                                           std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  return homomorphism_agreement(f, f, f, p, rho, mode, samples, seed);
}

// ---------------------------------------------------------------------------
// Dictatorship tester: expectation near 1/2 and f(x AND y) = f(x) AND f(y),
// with x, y ~ mu_p.

struct PrsOptions {
  std::uint64_t samples = 0;  // 0 selects exact enumeration
  std::uint64_t seed = 0;
  double expectation_window = 0.05;
  double min_agreement = 0.99;
};

struct PrsReport {
  TesterReport expectation;
  TesterReport agreement;
  bool expectation_ok = false;
  bool agreement_ok = false;
  bool accepted = false;
};

inline PrsReport prs_tester(const BooleanFunction& f, double p, const PrsOptions& opt = {}) {
  check_bias(p, "p");
  PrsReport rep;
  if (opt.samples == 0) {
    rep.expectation = TesterReport::exact_value(expectation(f, p));
    rep.agreement = TesterReport::exact_value(homomorphism_agreement_exact(f, f, f, p, p));
  } else {
    RngStream rng = RngStream(opt.seed).split("prs");
    std::uint64_t ones = 0, agree = 0;
    for (std::uint64_t t = 0; t < opt.samples; ++t) {
      const PointIndex x = rng.biased_point(f.dimension(), p);
      const PointIndex y = rng.biased_point(f.dimension(), p);
      ones += f(x);
      agree += f(x & y) == (f(x) && f(y));
    }
    rep.expectation = TesterReport::from_hits(ones, opt.samples, opt.seed);
    rep.agreement = TesterReport::from_hits(agree, opt.samples, opt.seed);
  }
  rep.expectation_ok = std::abs(rep.expectation.estimate - 0.5) <= opt.expectation_window;
  rep.agreement_ok = rep.agreement.estimate >= opt.min_agreement;
  rep.accepted = rep.expectation_ok && rep.agreement_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// One-sided error: eta1 = E[(1 - g) T f], eta2 = Pr[g = 1 and T f falls below lambda].

struct OneSidedErrors {
  double eta_zero_side = 0.0;
  double eta_one_side = 0.0;
};

template <CubeFunction F>
OneSidedErrors one_sided_check(const F& f, const BooleanFunction& g, const NoiseParams& params, double lambda) {
  detail::check_same_dimension(f.dimension(), g.dimension(), "one_sided_check");
  const RealTable tf = downward_noise_table(RealTable(to_table(f)), params.rho);
  const BiasedMeasure mu(g.dimension(), params.p);
  OneSidedErrors e;
  for (PointIndex x = 0; x < tf.size(); ++x) {
    if (!g(x)) {
      e.eta_zero_side += mu(x) * tf[x];
    } else if (tf[x] < lambda - kTieTolerance) {
      e.eta_one_side += mu(x);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Structure distances

enum class StructureKind { zero, constant, and_, and_or, monotone_junta, none };

inline const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::zero: return "zero";
    case StructureKind::constant: return "constant";
    case StructureKind::and_: return "and";
    case StructureKind::and_or: return "and_or";
    case StructureKind::monotone_junta: return "monotone_junta";
    case StructureKind::none: return "none";
  }
  return "none";
}

struct StructureVerdict {
  StructureKind kind = StructureKind::none;
  PointIndex subset = 0;    // and, monotone_junta
  BlockPartition partition;  // and_or
  double constant = 0.0;    // constant
  double distance = std::numeric_limits<double>::infinity();
  double eta = 0.0;
  double lambda = 0.0;
  bool distance_is_bound = false;  // upper bound rather than exact minimum
  std::vector<PointIndex> tied_subsets;  // every AND witness at the optimal distance

  std::string witness() const {
    auto coords = [](PointIndex m) {
      std::string s;
      for (int c : mask_to_coords(m)) s += (s.empty() ? "" : "+") + std::to_string(c);
      return s.empty() ? std::string("-") : s;
    };
    switch (kind) {
      case StructureKind::zero: return "0";
      case StructureKind::constant: {
        std::string s = std::to_string(constant);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
      }
      case StructureKind::and_:
      case StructureKind::monotone_junta: return coords(subset);
      case StructureKind::and_or: return partition.to_string();
      case StructureKind::none: return "-";
    }
    return "-";
  }
};

namespace detail {

// Lexicographic order on sorted coordinate lists after comparing cardinality.
inline bool subset_precedes(PointIndex a, PointIndex b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  const auto ca = mask_to_coords(a), cb = mask_to_coords(b);
  return ca < cb;
}

// d(S) = ||f - AND_S||_1 for every S, via one superset-sum pass:
// d(S) = E f + sum_{x superset of S} mu(x) (1 - 2 f(x)), valid for f in [0,1].
inline std::vector<double> and_distances(const RealTable& f, double p) {
  const int n = f.dimension();
  const BiasedMeasure mu(n, p);
  std::vector<double> w(f.size());
  double mean = 0.0;
  for (PointIndex x = 0; x < w.size(); ++x) {
    w[x] = mu(x) * (1.0 - 2.0 * f[x]);
    mean += mu(x) * f[x];
  }
  for (int i = 0; i < n; ++i) {
    const PointIndex bit = PointIndex{1} << i;
    for (PointIndex x = 0; x < w.size(); ++x) {
      if (!(x & bit)) w[x] += w[x | bit];
    }
  }
  for (double& v : w) v += mean;
  return w;
}

}  // namespace detail

// Closest function among {0, 1, AND_S}. Ties go to the smallest witness, then
// lexicographic order; the zero function precedes the constant 1.
template <CubeFunction F>
StructureVerdict distance_to_constant_or_and(const F& f, double p, bool include_zero = true) {
  check_bias(p, "p");
  if (f.dimension() > kMaxAndSearchDim) throw std::invalid_argument("distance_to_constant_or_and: n exceeds 16");
  const RealTable t(to_table(f));
  const std::vector<double> d = detail::and_distances(t, p);
  const double mean = expectation(t, p);
  StructureVerdict v;
  if (include_zero) {
    v.kind = StructureKind::zero;
    v.distance = mean;
  }
  // d[0] is the distance to AND_empty = constant 1.
  if (d[0] < v.distance - kTieTolerance) {
    v.kind = StructureKind::constant;
    v.constant = 1.0;
    v.distance = d[0];
  }
  std::vector<PointIndex> order(d.size() - 1);
  for (PointIndex s = 1; s < d.size(); ++s) order[s - 1] = s;
  std::sort(order.begin(), order.end(), detail::subset_precedes);
  for (PointIndex s : order) {
    if (d[s] < v.distance - kTieTolerance) {
      v.kind = StructureKind::and_;
      v.subset = s;
      v.distance = d[s];
    }
  }
  v.distance = std::max(0.0, v.distance);
  for (PointIndex s : order) {
    if (std::abs(d[s] - v.distance) <= 1e-9) v.tied_subsets.push_back(s);
  }
  return v;
}

namespace detail {

// Visits every family of at most `max_blocks` disjoint nonempty blocks over
// coordinates 0..c-1 (coordinates may be left out).
inline void for_each_partial_partition(int c, int max_blocks, const std::function<void(const std::vector<PointIndex>&)>& visit) {
  std::vector<PointIndex> blocks;
  std::function<void(int)> rec = [&](int j) {
    if (j == c) {
      visit(blocks);
      return;
    }
    const PointIndex bit = PointIndex{1} << j;
    rec(j + 1);
    for (auto& b : blocks) {
      b |= bit;
      rec(j + 1);
      b &= ~bit;
    }
    if (static_cast<int>(blocks.size()) < max_blocks) {
      blocks.push_back(bit);
      rec(j + 1);
      blocks.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// Closest AND-OR of width <= max_width. Candidate coordinates are all of them
// when n <= 10, otherwise those with influence >= tau (at most 10).
template <CubeFunction F>
StructureVerdict distance_to_and_or(const F& f, double p, int max_width, double tau = 0.0, bool include_zero = true) {
  check_bias(p, "p");
  if (max_width < 0) throw std::invalid_argument("distance_to_and_or: negative width cap");
  const RealTable t(to_table(f));
  const int n = t.dimension();
  const PointIndex candidates = n <= kMaxPartitionSearchCoords ? full_mask(n) : high_influence_coordinates(t, p, tau);
  const int c = std::popcount(candidates);
  if (c > kMaxPartitionSearchCoords) {
    throw std::invalid_argument("distance_to_and_or: " + std::to_string(c) + " candidate coordinates exceed the cap of 10");
  }
  const RealTable reduced = average_out_table(t, candidates, p);
  const BiasedMeasure mu(c, p);
  // below[U] = sum over a subset of U of mu(a) (1 - 2 f~(a)). The mass of points
  // meeting every block then follows by inclusion-exclusion over the blocks.
  std::vector<double> below(reduced.size());
  double mean = 0.0;
  for (PointIndex a = 0; a < below.size(); ++a) {
    below[a] = mu(a) * (1.0 - 2.0 * reduced[a]);
    mean += mu(a) * reduced[a];
  }
  for (int i = 0; i < c; ++i) {
    const PointIndex bit = PointIndex{1} << i;
    for (PointIndex a = 0; a < below.size(); ++a) {
      if (a & bit) below[a] += below[a ^ bit];
    }
  }
  const PointIndex all = full_mask(c);
  StructureVerdict v;
  if (include_zero) {
    v.kind = StructureKind::zero;
    v.distance = mean;
  }
  struct Key {
    int support, width;
    std::string text;
  };
  std::optional<Key> best_key;
  detail::for_each_partial_partition(c, max_width, [&](const std::vector<PointIndex>& blocks) {
    double d = mean;
    const std::size_t m = blocks.size();
    for (std::size_t sel = 0; sel < (std::size_t{1} << m); ++sel) {
      PointIndex avoided = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (sel & (std::size_t{1} << k)) avoided |= blocks[k];
      }
      d += (std::popcount(sel) % 2 ? -1.0 : 1.0) * below[all & ~avoided];
    }
    std::vector<PointIndex> mapped;
    for (PointIndex b : blocks) mapped.push_back(deposit_bits(b, candidates));
    BlockPartition part = BlockPartition(std::move(mapped)).normalized();
    Key key{std::popcount(part.support()), part.width(), part.to_string()};
    const bool better = d < v.distance - kTieTolerance;
    const bool tie = std::abs(d - v.distance) <= kTieTolerance && v.kind == StructureKind::and_or && best_key &&
                     std::tie(key.support, key.width, key.text) < std::tie(best_key->support, best_key->width, best_key->text);
    if (better || tie) {
      v.kind = StructureKind::and_or;
      v.partition = std::move(part);
      v.distance = d;
      best_key = std::move(key);
    }
  });
  v.distance = std::max(0.0, v.distance);
  return v;
}

// Upper bound: project onto high-influence coordinates, monotonize, round at 1/2.
template <CubeFunction F>
StructureVerdict distance_to_monotone_junta(const F& f, double p, double tau) {
  check_bias(p, "p");
  const PointIndex kept = high_influence_coordinates(f, p, tau);
  const BooleanFunction h = round_half(monotonize(junta_project(f, kept, p)));
  StructureVerdict v;
  v.kind = StructureKind::monotone_junta;
  v.subset = kept;
  v.distance = l1_distance(f, h, p);
  v.distance_is_bound = true;
  return v;
}

}  // namespace polyspec
