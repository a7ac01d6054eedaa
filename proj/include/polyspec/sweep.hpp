#pragma once

// Perturbation sweep relating homomorphism error to structural distance.
//
// For each family, flip rate and trial, a base function is perturbed by
// flipping every point independently with the given rate, then measured:
// homomorphism error, eigen-residual with lambda = E_{mu_rho}[f], and the
// distances to {constants, ANDs} and to AND-ORs.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "polyspec/analysis.hpp"
#include "polyspec/config.hpp"

namespace polyspec {

struct SweepRow {
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0.0;
  double rho = 0.0;
  double lambda = 0.0;
  double epsilon_hom = 0.0;
  double eta_residual = 0.0;
  double delta_const_and = 0.0;
  double delta_andor = 0.0;
  std::string verdict_kind;
  std::string witness;
  std::string family;
  double level = 0.0;
};

inline constexpr const char* kSweepHeader =
    "seed,n,p,rho,lambda,epsilon_hom,eta_residual,delta_const_and,delta_andor,verdict_kind,witness,family,level";

inline BooleanFunction sweep_base_function(const std::string& family, const ExperimentConfig& cfg) {
  const int n = cfg.n;
  if (family == "and") return make_and(n, full_mask(cfg.and_size));
  if (family == "maj3") {
    if (n < 3) throw ConfigError("family maj3 needs n >= 3");
    return make_majority(n, 0b111);
  }
  if (family == "or2") return make_or(n, 0b11);
  if (family == "xor2") return make_xor(n, 0b11);
  if (family == "f1") return make_f1(n);
  throw ConfigError("unknown sweep family '" + family + "' (expected and, maj3, or2, xor2, f1)");
}

inline BooleanFunction perturb(const BooleanFunction& base, double rate, RngStream& rng) {
  std::vector<PointIndex> flips;
  for (PointIndex x = 0; x < base.size(); ++x) {
    if (rng.bernoulli(rate)) flips.push_back(x);
  }
  return base.flipped(flips);
}

inline SweepRow sweep_measure(const BooleanFunction& f, const ExperimentConfig& cfg, std::uint64_t seed,
                              RngStream& rng) {
  SweepRow row;
  row.seed = seed;
  row.n = f.dimension();
  row.p = cfg.p;
  row.rho = cfg.rho;
  row.lambda = expectation(f, cfg.rho);
  if (f.dimension() <= kMaxExactHomDim) {
    row.epsilon_hom = 1.0 - homomorphism_agreement_exact(f, f, f, cfg.p, cfg.rho);
  } else {
    row.epsilon_hom =
        1.0 - homomorphism_agreement_montecarlo(f, f, f, cfg.p, cfg.rho, cfg.samples, rng.split("hom")).estimate;
  }
  NoiseParams prm{cfg.p, cfg.rho, row.lambda > 0.0 ? row.lambda : 1.0, cfg.nu};
  row.eta_residual = residual(f, f, prm);
  const StructureVerdict ca = distance_to_constant_or_and(f, cfg.p);
  row.delta_const_and = ca.distance;
  // More than 10 coordinates above tau exceed the partition search; the
  // column is then nan.
  try {
    row.delta_andor = distance_to_and_or(f, cfg.p, cfg.width_cap, cfg.tau).distance;
  } catch (const std::invalid_argument&) {
    row.delta_andor = std::numeric_limits<double>::quiet_NaN();
  }
  row.verdict_kind = kind_name(ca.kind);
  row.witness = ca.witness();
  return row;
}

inline int worker_count() {
  if (const char* env = std::getenv("POLYSPEC_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return k;
  }
  return 1;
}

// Rows come out ordered by (family, level, trial) whatever the worker count.
inline std::vector<SweepRow> delta_epsilon_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  cfg.require_seed();
  struct Task {
    std::string family;
    std::size_t level_index;
    int trial;
  };
  std::vector<Task> tasks;
  for (const auto& fam : cfg.families) {
    sweep_base_function(fam, cfg);
    for (std::size_t l = 0; l < cfg.levels.size(); ++l) {
      for (int t = 0; t < cfg.trials; ++t) tasks.push_back({fam, l, t});
    }
  }
  std::vector<SweepRow> rows(tasks.size());
  auto run = [&](std::size_t k) {
    const Task& task = tasks[k];
    const std::uint64_t seed = *cfg.seed + static_cast<std::uint64_t>(task.trial);
    RngStream rng = RngStream(seed).split("sweep").split(task.family).split(task.level_index);
    const BooleanFunction base = sweep_base_function(task.family, cfg);
    const double level = cfg.levels[task.level_index];
    RngStream flip_rng = rng.split("perturb");
    const BooleanFunction f = perturb(base, level, flip_rng);
    RngStream measure_rng = rng.split("measure");
    SweepRow row = sweep_measure(f, cfg, seed, measure_rng);
    row.family = task.family;
    row.level = level;
    rows[k] = std::move(row);
  };
  const int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run(k);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < tasks.size(); k += static_cast<std::size_t>(workers)) run(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.seed << ',' << r.n << ',' << format_number(r.p) << ',' << format_number(r.rho) << ','
        << format_number(r.lambda) << ',' << format_number(r.epsilon_hom) << ',' << format_number(r.eta_residual)
        << ',' << format_number(r.delta_const_and) << ',' << format_number(r.delta_andor) << ',' << r.verdict_kind
        << ',' << r.witness << ',' << r.family << ',' << format_number(r.level) << '\n';
  }
}

}  // namespace polyspec
