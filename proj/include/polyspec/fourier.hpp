#pragma once

// p-biased Fourier-Walsh analysis.
//
// chi_S^p(x) = prod_{i in S} (x_i - p) / sqrt(p(1-p)) is orthonormal under mu_p.
// The transform runs one 2x2 butterfly per coordinate, O(n 2^n) total.

#include <bit>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyspec/core.hpp"

namespace polyspec {

class Spectrum {
 public:
  Spectrum(int n, double p, std::vector<double> coeffs) : n_(n), p_(p), coeffs_(std::move(coeffs)) {
    check_bias(p);
    if (coeffs_.size() != cube_size(n)) throw std::invalid_argument("Spectrum: wrong coefficient count");
  }

  int dimension() const { return n_; }
  double bias() const { return p_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](PointIndex s) const { return coeffs_[s]; }
  std::span<const double> coeffs() const { return coeffs_; }

 private:
  int n_;
  double p_;
  std::vector<double> coeffs_;
};

inline void require_same_bias(const Spectrum& a, const Spectrum& b) {
  if (a.bias() != b.bias() || a.dimension() != b.dimension()) {
    throw std::invalid_argument("spectra computed at different biases or dimensions");
  }
}

inline double character(PointIndex s, double p, PointIndex x) {
  const double sd = std::sqrt(p * (1.0 - p));
  double v = 1.0;
  for (PointIndex m = s; m != 0; m &= m - 1) {
    const PointIndex bit = m & (~m + 1);
    v *= ((x & bit) ? (1.0 - p) : -p) / sd;
  }
  return v;
}

namespace detail {

// Applies the same 2x2 map to every (x_i = 0, x_i = 1) pair, coordinate by coordinate.
template <class Kernel>
void butterfly(std::span<double> v, int n, Kernel&& kernel) {
  const std::size_t size = v.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t j = base; j < base + half; ++j) kernel(v[j], v[j + half]);
    }
  }
}

}  // namespace detail

template <CubeFunction F>
Spectrum fourier_transform(const F& f, double p) {
  check_bias(p);
  std::vector<double> v(f.size());
  for (PointIndex x = 0; x < v.size(); ++x) v[x] = static_cast<double>(f(x));
  const double sd = std::sqrt(p * (1.0 - p));
  detail::butterfly(v, f.dimension(), [p, sd](double& a, double& b) {
    const double lo = a, hi = b;
    a = (1.0 - p) * lo + p * hi;
    b = sd * (hi - lo);
  });
  return Spectrum(f.dimension(), p, std::move(v));
}

inline RealTable inverse_fourier(const Spectrum& spec) {
  const double p = spec.bias();
  const double sd = std::sqrt(p * (1.0 - p));
  std::vector<double> v(spec.coeffs().begin(), spec.coeffs().end());
  detail::butterfly(v, spec.dimension(), [p, sd](double& a, double& b) {
    const double c0 = a, c1 = b;
    a = c0 - c1 * p / sd;
    b = c0 + c1 * (1.0 - p) / sd;
  });
  return RealTable(spec.dimension(), std::move(v));
}

// W_{=k} for k = 0..n.
inline std::vector<double> level_weights(const Spectrum& spec) {
  std::vector<double> w(static_cast<std::size_t>(spec.dimension()) + 1, 0.0);
  for (PointIndex s = 0; s < spec.size(); ++s) w[std::popcount(s)] += spec[s] * spec[s];
  return w;
}

inline double tail_weight(const Spectrum& spec, int k) {
  if (k < 0 || k > spec.dimension() + 1) {
    throw std::out_of_range("tail_weight: level " + std::to_string(k) + " outside [0, n+1]");
  }
  double s = 0.0;
  for (PointIndex set = 0; set < spec.size(); ++set) {
    if (std::popcount(set) >= k) s += spec[set] * spec[set];
  }
  return s;
}

// I_M = sum_{S superset of M} coeff(S)^2.
inline double set_influence(const Spectrum& spec, PointIndex m) {
  if ((m & ~full_mask(spec.dimension())) != 0) throw std::invalid_argument("set_influence: set beyond dimension");
  double s = 0.0;
  for (PointIndex set = 0; set < spec.size(); ++set) {
    if ((set & m) == m) s += spec[set] * spec[set];
  }
  return s;
}

inline double total_weight(const Spectrum& spec) { return tail_weight(spec, 0); }

}  // namespace polyspec
