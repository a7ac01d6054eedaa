#pragma once

// The downwards noise operator (T f)(x) = E_{z ~ mu_rho}[f(x AND z)], its
// inverse, its action on p-biased spectra, coupled samplers and noise sensitivity.
//
// T depends only on the retention rho. The bias p enters through the measure
// used to compare functions: T maps functions on mu_{rho p} to functions on mu_p.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "polyspec/core.hpp"
#include "polyspec/fourier.hpp"
#include "polyspec/rng.hpp"

namespace polyspec {

struct NoiseParams {
  double p = 0.5;
  double rho = 0.5;
  double lambda = 1.0;
  double nu = 0.1;

  double lower_bias() const { return rho * p; }
  double theta() const { return nu / (2.0 + nu); }

  void validate() const {
    check_bias(p, "p");
    check_bias(rho, "rho");
    check_bias(nu, "nu");
    if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must lie in (0,1]");
  }
};

// In place: per coordinate (a, b) -> (a, (1 - rho) a + rho b).
inline void apply_downward(std::span<double> v, int n, double rho) {
  check_bias(rho, "rho");
  detail::butterfly(v, n, [rho](double& a, double& b) { b = (1.0 - rho) * a + rho * b; });
}

// In place: per coordinate (a, c) -> (a, (c - (1 - rho) a) / rho). Exact inverse of apply_downward.
inline void apply_downward_inverse(std::span<double> v, int n, double rho) {
  check_bias(rho, "rho");
  detail::butterfly(v, n, [rho](double& a, double& c) { c = (c - (1.0 - rho) * a) / rho; });
}

inline RealTable downward_noise_table(RealTable t, double rho) {
  apply_downward(t.values(), t.dimension(), rho);
  return t;
}

// Boolean and bounded inputs map to a bounded function; raw tables stay raw.
template <CubeFunction F>
auto downward_noise(const F& f, double rho) {
  RealTable out = downward_noise_table(RealTable(to_table(f)), rho);
  if constexpr (std::same_as<F, RealTable>) {
    return out;
  } else {
    return BoundedFunction(std::move(out));
  }
}

template <CubeFunction F>
auto downward_noise(const F& f, const NoiseParams& params) {
  return downward_noise(f, params.rho);
}

// T^(m) f(x) = E[f(x AND y_1 AND ... AND y_{m-1})] with y_j ~ mu_rho independent,
// i.e. a single downward step with retention rho^{m-1}.
template <CubeFunction F>
auto iterated_noise(const F& f, double rho, int arity) {
  if (arity < 2) throw std::invalid_argument("iterated_noise: arity must be at least 2");
  check_bias(rho, "rho");
  return downward_noise(f, std::pow(rho, arity - 1));
}

// Solves T u = h. The result is a raw table: negative entries mean h is not
// the image of any nonnegative function.
//
// The inverse exists for every rho in (0,1) since T is triangular over the
// subset lattice with diagonal rho^{|B|}.
template <CubeFunction F>
RealTable invert_downward(const F& h, double rho) {
  RealTable t(to_table(h));
  apply_downward_inverse(t.values(), t.dimension(), rho);
  return t;
}

// Per-level contraction on the spectrum: T multiplies level |S| by factor^{|S|/2}.
inline double spectral_action_factor(double p, double rho) { return (1.0 - p) * rho / (1.0 - rho * p); }

// Max pointwise gap between the direct operator and the spectral route:
// expand f at bias rho*p, rescale, resynthesize at bias p.
template <CubeFunction F>
double spectral_action_check(const F& f, double p, double rho) {
  check_bias(p, "p");
  check_bias(rho, "rho");
  const Spectrum low = fourier_transform(f, rho * p);
  const double factor = spectral_action_factor(p, rho);
  std::vector<double> scaled_coeffs(low.size());
  for (PointIndex s = 0; s < low.size(); ++s) {
    scaled_coeffs[s] = std::pow(factor, 0.5 * std::popcount(s)) * low[s];
  }
  const RealTable via_spectrum = inverse_fourier(Spectrum(f.dimension(), p, std::move(scaled_coeffs)));
  const RealTable direct = downward_noise_table(RealTable(to_table(f)), rho);
  return linf_distance(direct, via_spectrum);
}

struct CoupledSample {
  PointIndex y = 0;  // ~ mu_{rho p}
  PointIndex x = 0;  // ~ mu_p, y <= x
};

// (y, x) ~ D(rho p, p): x ~ mu_p, z ~ mu_rho, y = x AND z.
inline CoupledSample sample_coupled(int n, const NoiseParams& params, RngStream& rng) {
  const PointIndex x = rng.biased_point(n, params.p);
  const PointIndex z = rng.biased_point(n, params.rho);
  return {x & z, x};
}

struct DnuSample {
  PointIndex y = 0;
  PointIndex m = 0;
  PointIndex x = 0;
  PointIndex z = 0;
};

// Quadruple with y <= m <= x, z; marginals mu_{1/4}, mu_{1/2 - nu/4}, mu_{1/2}, mu_{1/2};
// (x, z) is a (1 - nu)-correlated pair.
inline DnuSample sample_dnu(int n, double nu, RngStream& rng) {
  check_bias(nu, "nu");
  const double middle = 0.5 - nu / 4.0;
  const double retain = 0.25 / middle;
  const double theta = nu / (2.0 + nu);
  DnuSample s;
  for (int i = 0; i < n; ++i) {
    const PointIndex bit = PointIndex{1} << i;
    if (rng.bernoulli(middle)) {
      s.m |= bit;
      s.x |= bit;
      s.z |= bit;
      if (rng.bernoulli(retain)) s.y |= bit;
    } else {
      const double u = rng.uniform();
      if (u < theta) {
        s.x |= bit;
      } else if (u < 2.0 * theta) {
        s.z |= bit;
      }
    }
  }
  return s;
}

// x ~ mu_p, then each coordinate is independently resampled from mu_p with probability nu.
inline std::pair<PointIndex, PointIndex> sample_correlated_pair(int n, double p, double nu, RngStream& rng) {
  const PointIndex x = rng.biased_point(n, p);
  PointIndex y = x;
  for (int i = 0; i < n; ++i) {
    if (rng.bernoulli(nu)) {
      const PointIndex bit = PointIndex{1} << i;
      y = rng.bernoulli(p) ? (y | bit) : (y & ~bit);
    }
  }
  return {x, y};
}

enum class EstimateMode { exact, montecarlo };

// nu = 1 resamples every coordinate.
inline void check_resample_rate(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("nu must lie in (0,1], got " + std::to_string(nu));
}

// NS_nu[g] = 2 sum_S (1 - (1 - nu)^{|S|}) g^(S)^2 for 0/1-valued g.
inline TesterReport noise_sensitivity_exact(const BooleanFunction& g, double p, double nu) {
  check_resample_rate(nu);
  const Spectrum spec = fourier_transform(g, p);
  double s = 0.0;
  for (PointIndex set = 1; set < spec.size(); ++set) {
    s += (1.0 - std::pow(1.0 - nu, std::popcount(set))) * spec[set] * spec[set];
  }
  return TesterReport::exact_value(2.0 * s);
}

inline TesterReport noise_sensitivity_montecarlo(const BooleanFunction& g, double p, double nu,
                                                 std::uint64_t samples, RngStream rng) {
  check_bias(p, "p");
  check_resample_rate(nu);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto [x, y] = sample_correlated_pair(g.dimension(), p, nu, rng);
    hits += g(x) != g(y);
  }
  return TesterReport::from_hits(hits, samples, rng.seed());
}

inline TesterReport noise_sensitivity(const BooleanFunction& g, double p, double nu, EstimateMode mode,
                                      std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  if (mode == EstimateMode::exact) return noise_sensitivity_exact(g, p, nu);
  return noise_sensitivity_montecarlo(g, p, nu, samples, RngStream(seed).split("noise-sensitivity"));
}

// ||T f - lambda g||_1 under mu_p.
template <CubeFunction F, CubeFunction G>
double residual(const F& f, const G& g, const NoiseParams& params) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("residual: dimension mismatch");
  const RealTable tf = downward_noise_table(RealTable(to_table(f)), params.rho);
  const BiasedMeasure mu(f.dimension(), params.p);
  double s = 0.0;
  for (PointIndex x = 0; x < tf.size(); ++x) {
    s += mu(x) * std::abs(tf[x] - params.lambda * static_cast<double>(g(x)));
  }
  return s;
}

}  // namespace polyspec
