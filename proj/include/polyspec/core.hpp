#pragma once

// Function representations on the hypercube {0,1}^n.
//
// A point is a PointIndex whose bit i (least significant first) carries
// coordinate x_i. The same integer also names the subset supp(x) of [n], so
// "AND_S" for a mask S and "the point whose support is S" share one encoding
// across every module.

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyspec {

using PointIndex = std::uint32_t;

inline constexpr int kMaxBooleanDim = 24;
inline constexpr int kMaxBoundedDim = 20;
inline constexpr double kRangeTolerance = 1e-12;

inline int weight(PointIndex x) { return std::popcount(x); }

inline std::size_t cube_size(int n) { return std::size_t{1} << n; }

inline PointIndex full_mask(int n) {
  return n >= 32 ? ~PointIndex{0} : static_cast<PointIndex>((std::uint64_t{1} << n) - 1);
}

inline void check_dimension(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                " outside [0, " + std::to_string(cap) + "]");
  }
}

inline void check_bias(double p, const char* name = "bias") {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0,1), got " + std::to_string(p));
  }
}

// Scatter the low bits of `value` into the set positions of `mask` (pdep).
inline PointIndex deposit_bits(PointIndex value, PointIndex mask) {
  PointIndex out = 0;
  for (PointIndex m = mask; m != 0; m &= m - 1) {
    if (value & 1u) out |= m & (~m + 1);
    value >>= 1;
  }
  return out;
}

// Gather the bits of `x` at the set positions of `mask` into the low bits (pext).
inline PointIndex extract_bits(PointIndex x, PointIndex mask) {
  PointIndex out = 0;
  int k = 0;
  for (PointIndex m = mask; m != 0; m &= m - 1, ++k) {
    if (x & m & (~m + 1)) out |= PointIndex{1} << k;
  }
  return out;
}

inline std::vector<int> mask_to_coords(PointIndex mask) {
  std::vector<int> coords;
  for (PointIndex m = mask; m != 0; m &= m - 1) coords.push_back(std::countr_zero(m));
  return coords;
}

inline PointIndex coords_to_mask(std::span<const int> coords, int n) {
  PointIndex mask = 0;
  for (int c : coords) {
    if (c < 0 || c >= n) throw std::invalid_argument("coordinate " + std::to_string(c) + " out of range");
    mask |= PointIndex{1} << c;
  }
  return mask;
}

// Product measure mu_p, stored by Hamming weight.
class BiasedMeasure {
 public:
  BiasedMeasure(int n, double p) : n_(n), p_(p), by_weight_(static_cast<std::size_t>(n) + 1) {
    check_bias(p);
    for (int k = 0; k <= n; ++k) by_weight_[k] = std::pow(p, k) * std::pow(1.0 - p, n - k);
  }

  int dimension() const { return n_; }
  double bias() const { return p_; }
  double operator()(PointIndex x) const { return by_weight_[std::popcount(x)]; }
  double of_weight(int k) const { return by_weight_[k]; }

 private:
  int n_;
  double p_;
  std::vector<double> by_weight_;
};

// Unconstrained real-valued table over {0,1}^n. Used for linear-algebra
// intermediates (inverse images, spectra synthesis) where values may leave [0,1].
class RealTable {
 public:
  RealTable() : values_(1, 0.0) {}

  RealTable(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    check_dimension(n, kMaxBooleanDim, "RealTable");
    if (values_.size() != cube_size(n)) {
      throw std::invalid_argument("RealTable: expected " + std::to_string(cube_size(n)) + " values, got " +
                                  std::to_string(values_.size()));
    }
  }

  static RealTable zeros(int n) { return RealTable(n, std::vector<double>(cube_size(n), 0.0)); }

  int dimension() const { return n_; }
  std::size_t size() const { return values_.size(); }

  double operator[](PointIndex x) const { return values_[x]; }
  double& operator[](PointIndex x) { return values_[x]; }
  double operator()(PointIndex x) const { return values_[x]; }

  double at(PointIndex x) const {
    if (x >= values_.size()) throw std::out_of_range("point index " + std::to_string(x) + " out of range");
    return values_[x];
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double min() const { return *std::min_element(values_.begin(), values_.end()); }
  double max() const { return *std::max_element(values_.begin(), values_.end()); }

  friend bool operator==(const RealTable&, const RealTable&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

inline RealTable scaled(RealTable t, double c) {
  for (double& v : t.values()) v *= c;
  return t;
}

class BooleanFunction {
 public:
  BooleanFunction() : BooleanFunction(0) {}

  explicit BooleanFunction(int n) : n_(n) {
    check_dimension(n, kMaxBooleanDim, "BooleanFunction");
    words_.assign(word_count(n), 0);
  }

  template <class Pred>
    requires std::predicate<Pred&, PointIndex>
  static BooleanFunction from_predicate(int n, Pred&& pred) {
    BooleanFunction f(n);
    const std::size_t size = cube_size(n);
    for (std::size_t x = 0; x < size; ++x) {
      if (pred(static_cast<PointIndex>(x))) f.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    return f;
  }

  static BooleanFunction from_words(int n, std::vector<std::uint64_t> words) {
    BooleanFunction f(n);
    if (words.size() != f.words_.size()) throw std::invalid_argument("BooleanFunction: wrong word count");
    f.words_ = std::move(words);
    f.mask_tail();
    return f;
  }

  // Accepts a table whose entries are exactly 0 or 1.
  static BooleanFunction from_table(const RealTable& t) {
    return from_predicate(t.dimension(), [&](PointIndex x) {
      const double v = t[x];
      if (v != 0.0 && v != 1.0) throw std::invalid_argument("BooleanFunction: table entry is not 0/1");
      return v == 1.0;
    });
  }

  static BooleanFunction constant(int n, bool value) {
    return from_predicate(n, [value](PointIndex) { return value; });
  }

  int dimension() const { return n_; }
  std::size_t size() const { return cube_size(n_); }

  bool operator()(PointIndex x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

  bool at(PointIndex x) const {
    if (x >= size()) throw std::out_of_range("point index " + std::to_string(x) + " out of range");
    return (*this)(x);
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool is_one() const { return count_ones() == size(); }

  RealTable table() const {
    std::vector<double> v(size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = (*this)(static_cast<PointIndex>(x)) ? 1.0 : 0.0;
    return RealTable(n_, std::move(v));
  }

  BooleanFunction flipped(std::span<const PointIndex> points) const {
    BooleanFunction g = *this;
    for (PointIndex x : points) {
      if (x >= size()) throw std::out_of_range("flip point out of range");
      g.words_[x >> 6] ^= std::uint64_t{1} << (x & 63);
    }
    return g;
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  static std::size_t word_count(int n) { return (cube_size(n) + 63) / 64; }

  void mask_tail() {
    if (size() < 64) words_[0] &= (std::uint64_t{1} << size()) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class BoundedFunction {
 public:
  BoundedFunction() : table_(0, {0.0}) {}

  // Values within kRangeTolerance of [0,1] are clamped; anything further throws.
  explicit BoundedFunction(RealTable table) : table_(std::move(table)) {
    check_dimension(table_.dimension(), kMaxBoundedDim, "BoundedFunction");
    for (double& v : table_.values()) {
      if (!(v >= -kRangeTolerance && v <= 1.0 + kRangeTolerance)) {
        throw std::invalid_argument("BoundedFunction: value " + std::to_string(v) + " outside [0,1]");
      }
      v = std::clamp(v, 0.0, 1.0);
    }
  }

  BoundedFunction(int n, std::vector<double> values) : BoundedFunction(RealTable(n, std::move(values))) {}

  explicit BoundedFunction(const BooleanFunction& f) : BoundedFunction(f.table()) {}

  static BoundedFunction constant(int n, double c) {
    return BoundedFunction(n, std::vector<double>(cube_size(n), c));
  }

  int dimension() const { return table_.dimension(); }
  std::size_t size() const { return table_.size(); }
  double operator()(PointIndex x) const { return table_[x]; }
  double at(PointIndex x) const { return table_.at(x); }
  const RealTable& table() const { return table_; }
  std::span<const double> values() const { return table_.values(); }

  friend bool operator==(const BoundedFunction&, const BoundedFunction&) = default;

 private:
  RealTable table_;
};

template <class F>
concept CubeFunction =
    std::same_as<F, BooleanFunction> || std::same_as<F, BoundedFunction> || std::same_as<F, RealTable>;

inline RealTable to_table(const BooleanFunction& f) { return f.table(); }
inline const RealTable& to_table(const BoundedFunction& f) { return f.table(); }
inline const RealTable& to_table(const RealTable& t) { return t; }

template <CubeFunction F>
double evaluate(const F& f, PointIndex x) {
  if constexpr (std::same_as<F, BooleanFunction>) {
    return f.at(x) ? 1.0 : 0.0;
  } else {
    return f.at(x);
  }
}

// Fixes a set of coordinates to given bits.
class Restriction {
 public:
  Restriction() = default;

  explicit Restriction(std::span<const std::pair<int, bool>> fixed) {
    for (auto [coord, bit] : fixed) {
      if (coord < 0 || coord >= kMaxBooleanDim) {
        throw std::invalid_argument("Restriction: coordinate " + std::to_string(coord) + " out of range");
      }
      const PointIndex b = PointIndex{1} << coord;
      if (mask_ & b) throw std::invalid_argument("Restriction: coordinate " + std::to_string(coord) + " fixed twice");
      mask_ |= b;
      if (bit) values_ |= b;
    }
  }

  Restriction(std::initializer_list<std::pair<int, bool>> fixed)
      : Restriction(std::span<const std::pair<int, bool>>(fixed.begin(), fixed.size())) {}

  PointIndex mask() const { return mask_; }
  PointIndex values() const { return values_; }
  int size() const { return std::popcount(mask_); }

  void validate(int n) const {
    if ((mask_ & ~full_mask(n)) != 0) throw std::invalid_argument("Restriction: coordinate beyond dimension");
  }

 private:
  PointIndex mask_ = 0;
  PointIndex values_ = 0;
};

// Free coordinates keep their relative order and are renumbered from 0.
template <CubeFunction F>
F restrict(const F& f, const Restriction& r) {
  const int n = f.dimension();
  r.validate(n);
  const PointIndex free = full_mask(n) & ~r.mask();
  const int m = n - r.size();
  if constexpr (std::same_as<F, BooleanFunction>) {
    return BooleanFunction::from_predicate(m, [&](PointIndex a) { return f(deposit_bits(a, free) | r.values()); });
  } else {
    std::vector<double> out(cube_size(m));
    for (PointIndex a = 0; a < out.size(); ++a) out[a] = f(deposit_bits(a, free) | r.values());
    return F(m, std::move(out));
  }
}

// f~(alpha) = sum_beta mu_q(beta) f(alpha, beta), where alpha ranges over the
// coordinates in `kept` (renumbered in ascending order) and beta over the rest.
inline RealTable average_out_table(const RealTable& f, PointIndex kept, double q) {
  check_bias(q, "averaging bias");
  const int n = f.dimension();
  if ((kept & ~full_mask(n)) != 0) throw std::invalid_argument("average_out: coordinate beyond dimension");
  const PointIndex rest = full_mask(n) & ~kept;
  const BiasedMeasure mu(std::popcount(rest), q);
  RealTable out = RealTable::zeros(std::popcount(kept));
  for (PointIndex x = 0; x < f.size(); ++x) out[extract_bits(x, kept)] += mu(x & rest) * f[x];
  return out;
}

template <CubeFunction F>
auto average_out(const F& f, PointIndex kept, double q) {
  if constexpr (std::same_as<F, RealTable>) {
    return average_out_table(f, kept, q);
  } else {
    return BoundedFunction(average_out_table(to_table(f), kept, q));
  }
}

template <CubeFunction F>
double expectation(const F& f, double p) {
  const BiasedMeasure mu(f.dimension(), p);
  double s = 0.0;
  for (PointIndex x = 0; x < f.size(); ++x) s += mu(x) * static_cast<double>(f(x));
  return s;
}

template <CubeFunction F, CubeFunction G>
double l1_distance(const F& f, const G& g, double p) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("l1_distance: dimension mismatch");
  const BiasedMeasure mu(f.dimension(), p);
  double s = 0.0;
  for (PointIndex x = 0; x < f.size(); ++x) {
    s += mu(x) * std::abs(static_cast<double>(f(x)) - static_cast<double>(g(x)));
  }
  return s;
}

template <CubeFunction F, CubeFunction G>
double linf_distance(const F& f, const G& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("linf_distance: dimension mismatch");
  double m = 0.0;
  for (PointIndex x = 0; x < f.size(); ++x) {
    m = std::max(m, std::abs(static_cast<double>(f(x)) - static_cast<double>(g(x))));
  }
  return m;
}

}  // namespace polyspec
