#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyspec/core.hpp"
#include "polyspec/fourier.hpp"

namespace polyspec {

namespace detail {

inline void check_coordinate(int i, int n) {
  if (i < 0 || i >= n) throw std::out_of_range("coordinate " + std::to_string(i) + " out of range");
}

// Calls visit(low, high, weight) once per i-edge, where weight = mu_p of the
// point with coordinate i removed.
template <CubeFunction F, class Visit>
void for_each_edge(const F& f, int i, double p, Visit&& visit) {
  const int n = f.dimension();
  check_coordinate(i, n);
  const PointIndex bit = PointIndex{1} << i;
  const BiasedMeasure mu(n - 1, p);
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (x & bit) continue;
    visit(static_cast<double>(f(x)), static_cast<double>(f(x | bit)), mu(x));
  }
}

}  // namespace detail

// I_i = E_{x ~ mu_p}[(f(x) - f(x xor e_i))^2].
template <CubeFunction F>
double influence(const F& f, int i, double p) {
  double s = 0.0;
  detail::for_each_edge(f, i, p, [&](double lo, double hi, double w) { s += w * (lo - hi) * (lo - hi); });
  return s;
}

// I_i^- = E_{x ~ mu_p}[max(0, f(x with x_i = 0) - f(x with x_i = 1))]. The
// integrand does not depend on x_i, so each i-edge carries the mu_p weight of
// its remaining coordinates.
template <CubeFunction F>
double negative_influence(const F& f, int i, double p) {
  double s = 0.0;
  detail::for_each_edge(f, i, p, [&](double lo, double hi, double w) { s += w * std::max(0.0, lo - hi); });
  return s;
}

template <CubeFunction F>
double max_negative_influence(const F& f, double p) {
  double m = 0.0;
  for (int i = 0; i < f.dimension(); ++i) m = std::max(m, negative_influence(f, i, p));
  return m;
}

template <CubeFunction F>
bool is_monotone(const F& f) {
  for (int i = 0; i < f.dimension(); ++i) {
    const PointIndex bit = PointIndex{1} << i;
    for (PointIndex x = 0; x < f.size(); ++x) {
      if (!(x & bit) && static_cast<double>(f(x)) > static_cast<double>(f(x | bit))) return false;
    }
  }
  return true;
}

inline int sensitivity_at(const BooleanFunction& f, PointIndex x) {
  int s = 0;
  for (int i = 0; i < f.dimension(); ++i) s += f(x) != f(x ^ (PointIndex{1} << i));
  return s;
}

inline int sensitivity(const BooleanFunction& f) {
  int best = 0;
  for (PointIndex x = 0; x < f.size(); ++x) best = std::max(best, sensitivity_at(f, x));
  return best;
}

inline constexpr double kDegreeThreshold = 1e-9;

// Largest |S| with a nonzero p-biased coefficient. The answer does not depend on p.
template <CubeFunction F>
int degree(const F& f, double p = 0.5) {
  const Spectrum spec = fourier_transform(f, p);
  int d = 0;
  for (PointIndex s = 0; s < spec.size(); ++s) {
    if (std::abs(spec[s]) > kDegreeThreshold) d = std::max(d, std::popcount(s));
  }
  return d;
}

struct InfluenceProfile {
  double bias = 0.5;
  std::vector<double> influence;
  std::vector<double> negative_influence;
  std::optional<int> sensitivity;  // Boolean input only
  int degree = 0;
};

template <CubeFunction F>
InfluenceProfile profile(const F& f, double p) {
  InfluenceProfile prof;
  prof.bias = p;
  for (int i = 0; i < f.dimension(); ++i) {
    prof.influence.push_back(influence(f, i, p));
    prof.negative_influence.push_back(negative_influence(f, i, p));
  }
  if constexpr (std::same_as<F, BooleanFunction>) prof.sensitivity = sensitivity(f);
  prof.degree = degree(f);
  return prof;
}

// Coordinates whose influence is at least tau, as a mask.
template <CubeFunction F>
PointIndex high_influence_coordinates(const F& f, double p, double tau) {
  PointIndex mask = 0;
  for (int i = 0; i < f.dimension(); ++i) {
    if (influence(f, i, p) >= tau) mask |= PointIndex{1} << i;
  }
  return mask;
}

// S_i: sorts every i-edge so the smaller value sits at x_i = 0.
template <CubeFunction F>
F shift(const F& f, int i) {
  detail::check_coordinate(i, f.dimension());
  const PointIndex bit = PointIndex{1} << i;
  if constexpr (std::same_as<F, BooleanFunction>) {
    return BooleanFunction::from_predicate(f.dimension(), [&](PointIndex x) {
      const PointIndex lo = x & ~bit;
      return (x & bit) ? (f(lo) || f(lo | bit)) : (f(lo) && f(lo | bit));
    });
  } else {
    std::vector<double> v(f.values().begin(), f.values().end());
    for (PointIndex x = 0; x < v.size(); ++x) {
      if (x & bit) continue;
      if (v[x] > v[x | bit]) std::swap(v[x], v[x | bit]);
    }
    return F(f.dimension(), std::move(v));
  }
}

// S_{n-1} o ... o S_0.
template <CubeFunction F>
F monotonize(const F& f) {
  F h = f;
  for (int i = 0; i < f.dimension(); ++i) h = shift(h, i);
  return h;
}

// Closest function to f in L2(mu_p) that depends only on `kept`: average over
// the other coordinates, keeping the full dimension.
template <CubeFunction F>
BoundedFunction junta_project(const F& f, PointIndex kept, double p) {
  const int n = f.dimension();
  const RealTable avg = average_out_table(to_table(f), kept, p);
  std::vector<double> v(f.size());
  for (PointIndex x = 0; x < v.size(); ++x) v[x] = avg[extract_bits(x, kept)];
  return BoundedFunction(n, std::move(v));
}

// Projection followed by rounding at 1/2.
template <CubeFunction F>
BooleanFunction junta_project_rounded(const F& f, PointIndex kept, double p) {
  const BoundedFunction h = junta_project(f, kept, p);
  return BooleanFunction::from_predicate(f.dimension(), [&](PointIndex x) { return h(x) >= 0.5; });
}

inline BooleanFunction round_half(const BoundedFunction& h) {
  return BooleanFunction::from_predicate(h.dimension(), [&](PointIndex x) { return h(x) >= 0.5; });
}

}  // namespace polyspec
