#pragma once

// The polyspec command line. run() is the whole program; main() only forwards
// argv and the standard streams.
//
// Exit codes: 0 success, 1 failed `audit --strict`, 2 usage, configuration
// or input errors.

#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyspec/analysis.hpp"
#include "polyspec/audit.hpp"
#include "polyspec/config.hpp"
#include "polyspec/families.hpp"
#include "polyspec/influences.hpp"
#include "polyspec/io.hpp"
#include "polyspec/noise.hpp"
#include "polyspec/sweep.hpp"

namespace polyspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

using nlohmann::json;

inline AnyFunction load_function(const std::string& path, Streams& io) {
  return function_from_json(read_json(path, io.in));
}

inline void emit(const std::string& path, const json& j, Streams& io) { write_json(path, j, io.out); }

inline PointIndex parse_coords(const std::string& text) {
  PointIndex mask = 0;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    int c = 0;
    try {
      c = std::stoi(item);
    } catch (const std::exception&) {
      throw ConfigError("invalid coordinate '" + item + "'");
    }
    if (c < 0 || c >= kMaxBooleanDim) throw ConfigError("coordinate out of range: " + item);
    mask |= PointIndex{1} << c;
  }
  return mask;
}

inline int span_dimension(PointIndex mask) { return mask == 0 ? 0 : 32 - std::countl_zero(mask); }

inline EstimateMode parse_mode(const std::string& mode) {
  if (mode == "exact") return EstimateMode::exact;
  if (mode == "montecarlo" || mode == "mc") return EstimateMode::montecarlo;
  throw ConfigError("unknown mode '" + mode + "' (expected exact or montecarlo)");
}

// Named built-ins: and<k>, or<k>, xor<k>, maj<k>, dictator<k>.
inline BooleanFunction named_function(const std::string& name) {
  const auto digit = name.find_first_of("0123456789");
  if (digit == std::string::npos || digit == 0) throw ConfigError("unknown function name '" + name + "'");
  const std::string family = name.substr(0, digit);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(name.substr(digit), &used);
    if (digit + used != name.size()) throw ConfigError("");
  } catch (const std::exception&) {
    throw ConfigError("unknown function name '" + name + "'");
  }
  if (k < 1 || k > kMaxBooleanDim) throw ConfigError("function size out of range in '" + name + "'");
  const PointIndex all = full_mask(k);
  if (family == "and") return make_and(k, all);
  if (family == "or") return make_or(k, all);
  if (family == "xor") return make_xor(k, all);
  if (family == "maj") {
    if (k % 2 == 0) throw ConfigError("majority needs an odd number of coordinates");
    return make_majority(k, all);
  }
  if (family == "dictator") return make_dictator(k, 0);
  throw ConfigError("unknown function family '" + family + "' (expected and, or, xor, maj, dictator)");
}

inline BooleanFunction boolean_input(const std::string& fn, const std::string& path, Streams& io) {
  if (!fn.empty()) return named_function(fn);
  if (path.empty()) throw ConfigError("expected --fn or --in");
  return as_boolean(load_function(path, io));
}

inline json report_json(const TesterReport& r) {
  json j{{"estimate", r.estimate}, {"std_error", r.std_error}, {"samples", r.samples}, {"exact", r.exact}};
  if (!r.exact) j["seed"] = r.seed;
  return j;
}

inline json verdict_json(const StructureVerdict& v) {
  return {{"kind", kind_name(v.kind)},
          {"witness", v.witness()},
          {"distance", v.distance},
          {"distance_is_bound", v.distance_is_bound}};
}

inline json quantities_json(const std::vector<Quantity>& q) {
  json j = json::object();
  for (const auto& [k, v] : q) j[k] = v;
  return j;
}

inline std::uint64_t need_seed(const std::optional<std::uint64_t>& seed, const char* what) {
  if (!seed) throw ConfigError(std::string(what) + " is randomized and needs --seed");
  return *seed;
}

// Each subcommand registers its options and returns the action to run after parsing.
using Action = std::function<int(Streams&)>;

inline Action add_transform(CLI::App& app) {
  auto* sub = app.add_subcommand("transform", "Fourier-Walsh spectrum of a function under mu_p");
  auto p = std::make_shared<double>(0.5);
  auto in = std::make_shared<std::string>("-");
  auto out = std::make_shared<std::string>("-");
  sub->add_option("--p", *p, "bias")->capture_default_str();
  sub->add_option("--in", *in, "function JSON ('-' for stdin)")->capture_default_str();
  sub->add_option("--out", *out, "spectrum JSON ('-' for stdout)")->capture_default_str();
  return [=](Streams& io) {
    const AnyFunction f = load_function(*in, io);
    const Spectrum s = std::visit([&](const auto& g) { return fourier_transform(g, *p); }, f);
    emit(*out, to_json(s), io);
    return kExitOk;
  };
}

inline Action add_noise(CLI::App& app) {
  auto* sub = app.add_subcommand("noise", "apply the downward noise operator (or its inverse)");
  struct Opts {
    double p = 0.5, rho = 0.5;
    int m = 2;
    bool inverse = false;
    std::string in = "-", out = "-";
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--p", o->p, "bias of the output measure")->capture_default_str();
  sub->add_option("--rho", o->rho, "retention probability")->capture_default_str();
  sub->add_option("--m", o->m, "arity: m-1 independent noise draws")->capture_default_str();
  sub->add_flag("--inverse", o->inverse, "solve T u = h instead");
  sub->add_option("--in", o->in, "function JSON ('-' for stdin)")->capture_default_str();
  sub->add_option("--out", o->out, "function JSON ('-' for stdout)")->capture_default_str();
  return [=](Streams& io) {
    NoiseParams{o->p, o->rho}.validate();
    if (o->m < 2) throw ConfigError("--m must be at least 2");
    const AnyFunction f = load_function(o->in, io);
    const double rho = std::pow(o->rho, o->m - 1);
    if (o->inverse) {
      emit(o->out, to_json(std::visit([&](const auto& g) { return invert_downward(g, rho); }, f)), io);
      return kExitOk;
    }
    if (const auto* t = std::get_if<RealTable>(&f)) {
      emit(o->out, to_json(downward_noise(*t, rho)), io);
    } else {
      emit(o->out, to_json(downward_noise(as_bounded(f), rho)), io);
    }
    return kExitOk;
  };
}

inline Action add_ns(CLI::App& app) {
  auto* sub = app.add_subcommand("ns", "noise sensitivity of a Boolean function");
  struct Opts {
    double p = 0.5, nu = 0.1;
    std::string mode = "exact", in = "-", fn;
    std::uint64_t samples = kDefaultSamples;
    std::optional<std::uint64_t> seed;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--p", o->p, "bias")->capture_default_str();
  sub->add_option("--nu", o->nu, "resampling rate")->capture_default_str();
  sub->add_option("--mode", o->mode, "exact or montecarlo")->capture_default_str();
  sub->add_option("--samples", o->samples, "Monte Carlo sample count")->capture_default_str();
  sub->add_option("--seed", o->seed, "seed (montecarlo only)");
  sub->add_option("--fn", o->fn, "built-in function such as maj3");
  sub->add_option("--in", o->in, "function JSON ('-' for stdin)")->capture_default_str();
  return [=](Streams& io) {
    const EstimateMode mode = parse_mode(o->mode);
    const BooleanFunction g = boolean_input(o->fn, o->in, io);
    const std::uint64_t seed = mode == EstimateMode::exact ? 0 : need_seed(o->seed, "ns --mode montecarlo");
    if (mode == EstimateMode::montecarlo && o->samples == 0) throw ConfigError("--samples must be positive");
    emit("-", report_json(noise_sensitivity(g, o->p, o->nu, mode, o->samples, seed)), io);
    return kExitOk;
  };
}

inline Action add_profile(CLI::App& app) {
  auto* sub = app.add_subcommand("profile", "influences, negative influences, sensitivity and degree");
  auto p = std::make_shared<double>(0.5);
  auto in = std::make_shared<std::string>("-");
  sub->add_option("--p", *p, "bias")->capture_default_str();
  sub->add_option("--in", *in, "function JSON ('-' for stdin)")->capture_default_str();
  return [=](Streams& io) {
    check_bias(*p, "p");
    const AnyFunction f = load_function(*in, io);
    const InfluenceProfile prof = std::visit([&](const auto& g) { return profile(g, *p); }, f);
    json j{{"n", prof.influence.size()},
           {"p", prof.bias},
           {"influence", prof.influence},
           {"negative_influence", prof.negative_influence},
           {"degree", prof.degree}};
    j["sensitivity"] = prof.sensitivity ? json(*prof.sensitivity) : json(nullptr);
    emit("-", j, io);
    return kExitOk;
  };
}

inline Action add_make(CLI::App& app) {
  auto* sub = app.add_subcommand("make", "build a function from a named family");
  struct Opts {
    std::string family, set, blocks, out = "-";
    std::optional<int> n;
    int index = 0;
    int value = 1;
    std::optional<double> lambda;
    std::optional<std::uint64_t> seed;
    double c = 1.0;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--family", o->family, "and|or|xor|maj|dictator|const|andor|andxor|f1|f2|midslice")->required();
  sub->add_option("--n", o->n, "dimension");
  sub->add_option("--set", o->set, "coordinate set, e.g. 0,1 (and/or/xor/maj; default all)");
  sub->add_option("--blocks", o->blocks, "block partition, e.g. \"0,1;2\" (andor/andxor)");
  sub->add_option("--index", o->index, "dictator coordinate")->capture_default_str();
  sub->add_option("--value", o->value, "constant value 0 or 1")->capture_default_str();
  sub->add_option("--lambda", o->lambda, "Bernoulli rate (f2; midslice random variant)");
  sub->add_option("--seed", o->seed, "seed for randomized families");
  sub->add_option("--c", o->c, "middle-slice window constant")->capture_default_str();
  sub->add_option("--out", o->out, "function JSON ('-' for stdout)")->capture_default_str();
  return [=](Streams& io) {
    const std::string& fam = o->family;
    auto dimension = [&](int fallback) {
      const int n = o->n.value_or(fallback);
      if (n < 0 || n > kMaxBooleanDim) throw ConfigError("--n out of range");
      return n;
    };
    auto required_n = [&]() {
      if (!o->n) throw ConfigError("family '" + fam + "' needs --n");
      return dimension(0);
    };
    BooleanFunction f;
    if (fam == "and" || fam == "or" || fam == "xor" || fam == "maj") {
      const PointIndex given = parse_coords(o->set);
      const int n = dimension(span_dimension(given));
      const PointIndex s = o->set.empty() ? full_mask(n) : given;
      if (fam == "and") f = make_and(n, s);
      if (fam == "or") f = make_or(n, s);
      if (fam == "xor") f = make_xor(n, s);
      if (fam == "maj") f = make_majority(n, s);
    } else if (fam == "dictator") {
      f = make_dictator(dimension(o->index + 1), o->index);
    } else if (fam == "const") {
      if (o->value != 0 && o->value != 1) throw ConfigError("--value must be 0 or 1");
      f = BooleanFunction::constant(required_n(), o->value == 1);
    } else if (fam == "andor" || fam == "andxor") {
      BlockPartition part;
      try {
        part = BlockPartition::parse(o->blocks);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("--blocks: ") + e.what());
      }
      const int n = dimension(span_dimension(part.support()));
      f = fam == "andor" ? make_and_or(n, part) : make_and_xor(n, part);
    } else if (fam == "f1") {
      f = make_f1(required_n());
    } else if (fam == "f2") {
      if (!o->lambda) throw ConfigError("family f2 needs --lambda");
      RngStream rng = RngStream(need_seed(o->seed, "family f2")).split("make").split("f2");
      f = make_f2(required_n(), *o->lambda, rng);
    } else if (fam == "midslice") {
      const int n = required_n();
      if (o->lambda) {
        RngStream rng = RngStream(need_seed(o->seed, "family midslice with --lambda")).split("make").split("midslice");
        f = make_midslice_bernoulli(n, *o->lambda, rng, o->c);
      } else {
        f = make_midslice(n, o->c);
      }
    } else {
      throw ConfigError("unknown family '" + fam + "'");
    }
    emit(o->out, to_json(f), io);
    return kExitOk;
  };
}

inline Action add_classify(CLI::App& app) {
  auto* sub = app.add_subcommand("classify", "all Boolean eigenfunctions of T on n <= 4 coordinates");
  auto n = std::make_shared<int>(2);
  auto rho = std::make_shared<double>(0.5);
  sub->add_option("--n", *n, "dimension")->capture_default_str();
  sub->add_option("--rho", *rho, "retention probability")->capture_default_str();
  return [=](Streams& io) {
    const auto pairs = classify_boolean_eigens(*n, *rho);
    json list = json::array();
    for (const Eigenpair& e : pairs) {
      json item{{"bits_hex", to_bits_hex(e.function)}};
      item["lambda"] = e.eigenvalue ? json(*e.eigenvalue) : json(nullptr);
      if (!e.function.is_zero()) {
        PointIndex lowest = 0;
        while (!e.function(lowest)) ++lowest;
        if (e.function == make_and(*n, lowest)) item["and"] = mask_to_coords(lowest);
      }
      list.push_back(std::move(item));
    }
    emit("-", json{{"n", *n}, {"rho", *rho}, {"count", pairs.size()}, {"eigenfunctions", std::move(list)}}, io);
    return kExitOk;
  };
}

inline Action add_solve(CLI::App& app) {
  auto* sub = app.add_subcommand("solve", "solve T f = lambda g exactly for a Boolean g");
  struct Opts {
    double rho = 0.5, lambda = 1.0;
    std::string in = "-", out;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--rho", o->rho, "retention probability")->capture_default_str();
  sub->add_option("--lambda", o->lambda, "eigenvalue")->capture_default_str();
  sub->add_option("--in", o->in, "g as function JSON ('-' for stdin)")->capture_default_str();
  sub->add_option("--out", o->out, "also write f as function JSON");
  return [=](Streams& io) {
    const BooleanFunction g = as_boolean(load_function(o->in, io));
    const ExactPairSolution sol = solve_exact_pair(g, o->rho, o->lambda);
    json j{{"nonnegative", sol.nonnegative},
           {"feasible", sol.feasible},
           {"matches_and_xor", sol.matches_and_xor},
           {"inverse", to_json(sol.inverse)},
           {"f", to_json(sol.f)}};
    j["lambda_max"] = sol.lambda_max ? json(*sol.lambda_max) : json(nullptr);
    j["partition"] = sol.partition ? json(sol.partition->to_string()) : json(nullptr);
    if (!o->out.empty()) write_json(o->out, to_json(sol.f), io.out);
    emit("-", j, io);
    return kExitOk;
  };
}

inline Action add_test_hom(CLI::App& app) {
  auto* sub = app.add_subcommand("test-hom", "agreement rate Pr[f(x AND y) = g(x) AND h(y)]");
  struct Opts {
    std::string fn, in, g, h;
    double p = 0.5, rho = 0.5;
    bool exact = false, report = false;
    std::uint64_t samples = kDefaultSamples;
    std::optional<std::uint64_t> seed;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--fn", o->fn, "built-in function such as maj3, xor2, and2");
  sub->add_option("--in", o->in, "f as function JSON");
  sub->add_option("--g", o->g, "g as function JSON (default f)");
  sub->add_option("--h", o->h, "h as function JSON (default g)");
  sub->add_option("--p", o->p, "bias of x")->capture_default_str();
  sub->add_option("--rho", o->rho, "bias of y")->capture_default_str();
  sub->add_flag("--exact", o->exact, "enumerate all pairs instead of sampling");
  sub->add_option("--samples", o->samples, "Monte Carlo sample count")->capture_default_str();
  sub->add_option("--seed", o->seed, "seed (sampling only)");
  sub->add_flag("--report", o->report, "print the full report as JSON");
  return [=](Streams& io) {
    const BooleanFunction f = boolean_input(o->fn, o->in, io);
    const BooleanFunction g = o->g.empty() ? f : as_boolean(load_function(o->g, io));
    const BooleanFunction h = o->h.empty() ? g : as_boolean(load_function(o->h, io));
    const EstimateMode mode = o->exact ? EstimateMode::exact : EstimateMode::montecarlo;
    const std::uint64_t seed = o->exact ? 0 : need_seed(o->seed, "test-hom without --exact");
    if (!o->exact && o->samples == 0) throw ConfigError("--samples must be positive");
    const TesterReport r = homomorphism_agreement(f, g, h, o->p, o->rho, mode, o->samples, seed);
    if (o->report) {
      emit("-", report_json(r), io);
    } else {
      io.out << format_number(r.estimate) << '\n';
    }
    return kExitOk;
  };
}

inline Action add_prs(CLI::App& app) {
  auto* sub = app.add_subcommand("prs", "dictatorship test: expectation near 1/2 and AND-homomorphism");
  struct Opts {
    std::string fn, in;
    double p = 0.5;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    double window = 0.05, min_agreement = 0.99;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--fn", o->fn, "built-in function such as dictator1");
  sub->add_option("--in", o->in, "function JSON");
  sub->add_option("--p", o->p, "bias")->capture_default_str();
  sub->add_option("--samples", o->samples, "sample count, 0 for exact enumeration")->capture_default_str();
  sub->add_option("--seed", o->seed, "seed (sampling only)");
  sub->add_option("--window", o->window, "allowed |E f - 1/2|")->capture_default_str();
  sub->add_option("--min-agreement", o->min_agreement, "required agreement rate")->capture_default_str();
  return [=](Streams& io) {
    const BooleanFunction f = boolean_input(o->fn, o->in, io);
    PrsOptions opt;
    opt.samples = o->samples;
    opt.seed = o->samples == 0 ? 0 : need_seed(o->seed, "prs with --samples");
    opt.expectation_window = o->window;
    opt.min_agreement = o->min_agreement;
    const PrsReport r = prs_tester(f, o->p, opt);
    emit("-",
         json{{"expectation", report_json(r.expectation)},
              {"agreement", report_json(r.agreement)},
              {"expectation_ok", r.expectation_ok},
              {"agreement_ok", r.agreement_ok},
              {"accepted", r.accepted}},
         io);
    return kExitOk;
  };
}

inline Action add_audit(CLI::App& app) {
  auto* sub = app.add_subcommand("audit", "measure a structure theorem's premise and conclusion on (f, g)");
  struct Opts {
    std::string theorem, f, g, h;
    NoiseParams params;
    AuditThresholds thr;
    bool strict = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--theorem", o->theorem, "small-rho|and-or|large-lambda|monotone|homomorphism|one-sided")->required();
  sub->add_option("--f", o->f, "f as function JSON")->required();
  sub->add_option("--g", o->g, "g as function JSON (default f)");
  sub->add_option("--h", o->h, "h as function JSON (homomorphism only; default g)");
  sub->add_option("--p", o->params.p, "bias")->capture_default_str();
  sub->add_option("--rho", o->params.rho, "retention probability")->capture_default_str();
  sub->add_option("--lambda", o->params.lambda, "eigenvalue")->capture_default_str();
  sub->add_option("--nu", o->params.nu, "noise rate")->capture_default_str();
  sub->add_option("--eta", o->thr.eta, "premise threshold")->capture_default_str();
  sub->add_option("--epsilon", o->thr.epsilon, "conclusion threshold")->capture_default_str();
  sub->add_option("--zeta", o->thr.zeta, "margin of lambda over rho")->capture_default_str();
  sub->add_option("--tau", o->thr.tau, "influence threshold for candidate coordinates")->capture_default_str();
  sub->add_option("--width-cap", o->thr.width_cap, "maximum AND-OR width")->capture_default_str();
  sub->add_flag("--strict", o->strict, "exit 1 when the premise holds but the conclusion does not");
  return [=](Streams& io) {
    const Theorem th = parse_theorem(o->theorem);
    const AnyFunction f_any = load_function(o->f, io);
    AuditInput input{as_bounded(f_any), o->g.empty() ? as_boolean(f_any) : as_boolean(load_function(o->g, io)),
                     std::nullopt, o->params};
    if (!o->h.empty()) input.h = as_boolean(load_function(o->h, io));
    const AuditReport r = theorem_audit(input, th, o->thr);
    emit("-",
         json{{"theorem", theorem_name(r.theorem)},
              {"premise", quantities_json(r.premise)},
              {"conclusion", quantities_json(r.conclusion)},
              {"premise_error", r.premise_error},
              {"conclusion_error", r.conclusion_error},
              {"premise_holds", r.premise_holds},
              {"conclusion_holds", r.conclusion_holds},
              {"consistent", r.consistent()},
              {"verdict", verdict_json(r.verdict)}},
         io);
    return o->strict && !r.consistent() ? kExitVerdict : kExitOk;
  };
}

inline Action add_sweep(CLI::App& app) {
  auto* sub = app.add_subcommand("sweep", "perturbation sweep of homomorphism error against structure distance");
  struct Opts {
    std::string config, out;
    std::vector<std::string> overrides;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--config", o->config, "key=value configuration file");
  sub->add_option("--set", o->overrides, "override one key, e.g. --set seed=7 (repeatable)");
  sub->add_option("--out", o->out, "CSV path ('-' for stdout; default: the config's output key or stdout)");
  return [=](Streams& io) {
    ExperimentConfig cfg = o->config.empty() ? ExperimentConfig{} : ExperimentConfig::load(o->config);
    for (const std::string& kv : o->overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    const std::vector<SweepRow> rows = delta_epsilon_sweep(cfg);
    const std::string path = !o->out.empty() ? o->out : (cfg.output.empty() ? "-" : cfg.output);
    if (path == "-") {
      write_sweep_csv(io.out, rows);
    } else {
      std::ofstream file(path);
      if (!file) throw ConfigError("cannot write '" + path + "'");
      write_sweep_csv(file, rows);
    }
    return kExitOk;
  };
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app("Analysis of the downward noise operator on the p-biased hypercube", "polyspec");
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  const std::vector<std::pair<CLI::App*, detail::Action>> commands = [&] {
    std::vector<std::pair<CLI::App*, detail::Action>> list;
    for (auto add : {detail::add_transform, detail::add_noise, detail::add_ns, detail::add_profile, detail::add_make,
                     detail::add_classify, detail::add_solve, detail::add_test_hom, detail::add_prs,
                     detail::add_audit, detail::add_sweep}) {
      detail::Action action = add(app);
      list.emplace_back(app.get_subcommands([](CLI::App*) { return true; }).back(), std::move(action));
    }
    return list;
  }();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    for (const auto& [sub, action] : commands) {
      if (sub->parsed()) return action(io);
    }
    err << "polyspec: no subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "polyspec: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int run(const std::vector<std::string>& args) { return run(args, std::cin, std::cout, std::cerr); }

}  // namespace polyspec::cli
