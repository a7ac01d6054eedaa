#pragma once

// Structure audits. Each audit measures the premise quantities of one
// classification statement (residual, monotonicity, agreement, one-sided
// errors) together with the distances its conclusion talks about, and
// compares both against configured thresholds. No asymptotic constants are
// assumed: thresholds are inputs.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyspec/analysis.hpp"

namespace polyspec {

enum class Theorem {
  small_rho,     // rho < 1/2: g ~ AND_T, averaged f ~ rho^{-|T|} lambda AND_T
  and_or,        // rho = 1/2: g ~ AND-OR, averaged f ~ 2^r lambda AND-XOR
  large_lambda,  // lambda >= rho + zeta: g ~ constant, E f ~ lambda * constant
  monotone,      // almost-monotone f: g ~ constant or small AND, averaged f in L_inf
  homomorphism,  // f(x AND y) = g(x) AND h(y): all three ~ AND_T, or f and g/h ~ 0
  one_sided,     // one-sided errors: g ~ monotone junta
};

inline Theorem parse_theorem(std::string_view id) {
  if (id == "small-rho") return Theorem::small_rho;
  if (id == "and-or") return Theorem::and_or;
  if (id == "large-lambda") return Theorem::large_lambda;
  if (id == "monotone") return Theorem::monotone;
  if (id == "homomorphism") return Theorem::homomorphism;
  if (id == "one-sided") return Theorem::one_sided;
  throw std::invalid_argument("unknown theorem id '" + std::string(id) +
                              "' (expected small-rho, and-or, large-lambda, monotone, homomorphism, one-sided)");
}

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::small_rho: return "small-rho";
    case Theorem::and_or: return "and-or";
    case Theorem::large_lambda: return "large-lambda";
    case Theorem::monotone: return "monotone";
    case Theorem::homomorphism: return "homomorphism";
    case Theorem::one_sided: return "one-sided";
  }
  return "unknown";
}

struct AuditThresholds {
  double eta = 0.01;      // premise counts as met at or below this
  double epsilon = 0.1;   // conclusion counts as met at or below this
  double zeta = 0.1;
  double tau = 0.05;
  int width_cap = 3;
};

struct AuditInput {
  BoundedFunction f;
  BooleanFunction g;
  std::optional<BooleanFunction> h;  // homomorphism audit only; defaults to g
  NoiseParams params;
};

using Quantity = std::pair<std::string, double>;

struct AuditReport {
  Theorem theorem = Theorem::and_or;
  std::vector<Quantity> premise;
  std::vector<Quantity> conclusion;
  StructureVerdict verdict;
  double premise_error = 0.0;     // single scalar compared against eta
  double conclusion_error = 0.0;  // single scalar compared against epsilon
  bool premise_holds = false;
  bool conclusion_holds = false;

  // A violated premise makes no claim; otherwise the conclusion must hold.
  bool consistent() const { return !premise_holds || conclusion_holds; }

  std::optional<double> get(std::string_view key) const {
    for (const auto& list : {premise, conclusion}) {
      for (const auto& [k, v] : list) {
        if (k == key) return v;
      }
    }
    return std::nullopt;
  }
};

namespace detail {

// Distance under mu_q between a table on |T| coordinates and c * AND on all of them.
inline double table_to_scaled_and(const RealTable& t, double c, double q, bool linf) {
  const PointIndex top = full_mask(t.dimension());
  const BiasedMeasure mu(t.dimension(), q);
  double acc = 0.0;
  for (PointIndex a = 0; a < t.size(); ++a) {
    const double gap = std::abs(t[a] - (a == top ? c : 0.0));
    acc = linf ? std::max(acc, gap) : acc + mu(a) * gap;
  }
  return acc;
}

inline BooleanFunction require_boolean(const BoundedFunction& f, const char* what) {
  for (double v : f.values()) {
    if (v != 0.0 && v != 1.0) throw std::invalid_argument(std::string(what) + " must be Boolean for this audit");
  }
  return BooleanFunction::from_table(f.table());
}

inline void finish(AuditReport& rep, double premise_error, double conclusion_error, bool side_conditions,
                   const AuditThresholds& thr) {
  rep.premise_error = premise_error;
  rep.conclusion_error = conclusion_error;
  rep.premise_holds = side_conditions && premise_error <= thr.eta;
  rep.conclusion_holds = conclusion_error <= thr.epsilon;
}

}  // namespace detail

inline AuditReport theorem_audit(const AuditInput& in, Theorem theorem, const AuditThresholds& thr = {}) {
  const NoiseParams& prm = in.params;
  prm.validate();
  const int n = in.f.dimension();
  if (in.g.dimension() != n || (in.h && in.h->dimension() != n)) {
    throw std::invalid_argument("theorem_audit: dimension mismatch");
  }
  const double p = prm.p, rho = prm.rho, lambda = prm.lambda, q = prm.lower_bias();
  AuditReport rep;
  rep.theorem = theorem;

  switch (theorem) {
    case Theorem::small_rho:
    case Theorem::monotone: {
      const double eta = residual(in.f, in.g, prm);
      rep.premise.push_back({"eta_residual", eta});
      double premise_error = eta;
      bool side = lambda >= thr.zeta;
      if (theorem == Theorem::small_rho) {
        side = side && rho <= 0.5 - thr.zeta;
      } else {
        const double neg = max_negative_influence(in.f, q);
        rep.premise.push_back({"max_negative_influence", neg});
        premise_error = std::max(eta, neg);
      }
      rep.premise.push_back({"rho", rho});
      rep.premise.push_back({"lambda", lambda});

      const double zero_gap = std::max(expectation(in.f, q), expectation(in.g, p));
      StructureVerdict v = distance_to_constant_or_and(in.g, p, theorem == Theorem::monotone);
      const PointIndex t = v.kind == StructureKind::and_ ? v.subset : 0;
      const double target = v.kind == StructureKind::zero ? 0.0 : std::pow(rho, -std::popcount(t)) * lambda;
      const RealTable averaged = average_out_table(in.f.table(), t, q);
      const double f_gap = detail::table_to_scaled_and(averaged, target, q, theorem == Theorem::monotone);
      rep.conclusion.push_back({"zero_distance", zero_gap});
      rep.conclusion.push_back({"delta_g", v.distance});
      rep.conclusion.push_back({theorem == Theorem::monotone ? "delta_f_averaged_linf" : "delta_f_averaged", f_gap});
      rep.conclusion.push_back({"and_size", static_cast<double>(std::popcount(t))});
      double structure = std::max(v.distance, f_gap);
      if (theorem == Theorem::monotone) {
        const double bound = std::ceil(std::log2(2.0 / lambda));
        rep.conclusion.push_back({"and_size_bound", bound});
        if (std::popcount(t) > bound) structure = std::numeric_limits<double>::infinity();
        detail::finish(rep, premise_error, structure, side, thr);
      } else {
        detail::finish(rep, premise_error, std::min(zero_gap, structure), side, thr);
      }
      v.eta = eta;
      v.lambda = lambda;
      rep.verdict = v;
      break;
    }

    case Theorem::and_or: {
      const double eta = residual(in.f, in.g, prm);
      rep.premise.push_back({"eta_residual", eta});
      rep.premise.push_back({"rho", rho});
      rep.premise.push_back({"lambda", lambda});
      const bool side = std::abs(rho - 0.5) < 1e-12 && lambda >= thr.zeta;
      const double zero_gap = std::max(expectation(in.f, q), expectation(in.g, p));
      StructureVerdict v = distance_to_and_or(in.g, p, thr.width_cap, thr.tau, false);
      const PointIndex t = v.partition.support();
      std::vector<PointIndex> local;
      for (PointIndex b : v.partition.blocks()) local.push_back(extract_bits(b, t));
      const BlockPartition local_part(std::move(local));
      const RealTable averaged = average_out_table(in.f.table(), t, q);
      const double scale = std::ldexp(lambda, v.partition.width());
      const BiasedMeasure mu(std::popcount(t), q);
      double f_gap = 0.0;
      for (PointIndex a = 0; a < averaged.size(); ++a) {
        f_gap += mu(a) * std::abs(averaged[a] - (and_xor_value(local_part, a) ? scale : 0.0));
      }
      rep.conclusion.push_back({"zero_distance", zero_gap});
      rep.conclusion.push_back({"delta_g", v.distance});
      rep.conclusion.push_back({"delta_f_averaged", f_gap});
      rep.conclusion.push_back({"width", static_cast<double>(v.partition.width())});
      detail::finish(rep, eta, std::min(zero_gap, std::max(v.distance, f_gap)), side, thr);
      v.eta = eta;
      v.lambda = lambda;
      rep.verdict = v;
      break;
    }

    case Theorem::large_lambda: {
      const double eta = residual(in.f, in.g, prm);
      rep.premise.push_back({"eta_residual", eta});
      rep.premise.push_back({"lambda_minus_rho", lambda - rho});
      const double mean_g = expectation(in.g, p);
      const double gamma = mean_g >= 0.5 ? 1.0 : 0.0;
      const double g_gap = std::abs(mean_g - gamma);
      const double mean_f = expectation(in.f, q);
      const double f_gap = std::abs(mean_f - lambda * gamma);
      rep.conclusion.push_back({"gamma", gamma});
      rep.conclusion.push_back({"delta_g", g_gap});
      rep.conclusion.push_back({"expectation_f_low", mean_f});
      rep.conclusion.push_back({"delta_expectation", f_gap});
      detail::finish(rep, eta, std::max(g_gap, f_gap), lambda >= rho + thr.zeta, thr);
      StructureVerdict v;
      v.kind = gamma == 0.0 ? StructureKind::zero : StructureKind::constant;
      v.constant = gamma;
      v.distance = g_gap;
      v.eta = eta;
      v.lambda = lambda;
      rep.verdict = v;
      break;
    }

    case Theorem::homomorphism: {
      if (n > kMaxExactHomDim) throw std::invalid_argument("homomorphism audit limited to n <= 13");
      const BooleanFunction f = detail::require_boolean(in.f, "f");
      const BooleanFunction& g = in.g;
      const BooleanFunction& h = in.h ? *in.h : in.g;
      const double agree = homomorphism_agreement_exact(f, g, h, p, rho);
      rep.premise.push_back({"epsilon_hom", 1.0 - agree});
      const double zero_gap = std::max(expectation(f, q), std::min(expectation(g, p), expectation(h, rho)));
      const auto df = detail::and_distances(f.table(), q);
      const auto dg = detail::and_distances(g.table(), p);
      const auto dh = detail::and_distances(h.table(), rho);
      PointIndex best_t = 0;
      double best = std::numeric_limits<double>::infinity();
      for (PointIndex t = 0; t < df.size(); ++t) {
        const double worst = std::max({df[t], dg[t], dh[t]});
        if (worst < best - kTieTolerance) {
          best = worst;
          best_t = t;
        }
      }
      rep.conclusion.push_back({"zero_distance", zero_gap});
      rep.conclusion.push_back({"delta_and", best});
      rep.conclusion.push_back({"and_size", static_cast<double>(std::popcount(best_t))});
      detail::finish(rep, 1.0 - agree, std::min(zero_gap, best), true, thr);
      StructureVerdict v;
      if (zero_gap < best) {
        v.kind = StructureKind::zero;
        v.distance = zero_gap;
      } else {
        v.kind = StructureKind::and_;
        v.subset = best_t;
        v.distance = best;
      }
      v.eta = 1.0 - agree;
      rep.verdict = v;
      break;
    }

    case Theorem::one_sided: {
      const OneSidedErrors e = one_sided_check(in.f, in.g, prm, lambda);
      rep.premise.push_back({"eta_zero_side", e.eta_zero_side});
      rep.premise.push_back({"eta_one_side", e.eta_one_side});
      StructureVerdict v = distance_to_monotone_junta(in.g, p, thr.tau);
      rep.conclusion.push_back({"delta_monotone_junta_bound", v.distance});
      rep.conclusion.push_back({"junta_size", static_cast<double>(std::popcount(v.subset))});
      detail::finish(rep, std::max(e.eta_zero_side, e.eta_one_side), v.distance, lambda >= thr.zeta, thr);
      v.lambda = lambda;
      rep.verdict = v;
      break;
    }
  }
  return rep;
}

inline AuditReport theorem_audit(const AuditInput& in, std::string_view id, const AuditThresholds& thr = {}) {
  return theorem_audit(in, parse_theorem(id), thr);
}

}  // namespace polyspec
