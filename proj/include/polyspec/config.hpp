#pragma once

// Experiment configuration: a flat key=value file, one entry per line, '#'
// starts a comment. Every field round-trips losslessly through to_text/parse.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "polyspec/core.hpp"

namespace polyspec {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal text that parses back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view text, std::string_view key) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("invalid number for '" + std::string(key) + "': " + std::string(text));
  }
  return v;
}

inline std::uint64_t parse_unsigned(std::string_view text, std::string_view key) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': " + std::string(text));
  }
  return v;
}

struct ExperimentConfig {
  int n = 10;
  double p = 0.5;
  double rho = 0.5;
  double lambda = 0.5;
  double nu = 0.1;
  int arity = 2;
  int width_cap = 3;
  std::uint64_t samples = 1'000'000;
  std::optional<std::uint64_t> seed;
  double tau = 0.05;
  double epsilon = 0.1;
  double eta = 0.01;
  double zeta = 0.1;
  int trials = 3;
  int and_size = 2;
  std::vector<double> levels{0.0, 0.005, 0.01, 0.02, 0.05, 0.1};
  std::vector<std::string> families{"and", "maj3"};
  std::string output;

  void validate() const {
    auto prob = [](double v, const char* name) {
      if (!(v > 0.0 && v < 1.0)) throw ConfigError(std::string(name) + " must lie in (0,1)");
    };
    prob(p, "p");
    prob(rho, "rho");
    prob(nu, "nu");
    if (!(lambda > 0.0 && lambda <= 1.0)) throw ConfigError("lambda must lie in (0,1]");
    if (n < 1 || n > kMaxBoundedDim) throw ConfigError("n must lie in [1,20]");
    if (arity < 2) throw ConfigError("m must be at least 2");
    if (width_cap < 0) throw ConfigError("width_cap must be nonnegative");
    if (trials < 1) throw ConfigError("trials must be positive");
    if (and_size < 0 || and_size > n) throw ConfigError("and_size must lie in [0,n]");
    for (double l : levels) {
      if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("levels must lie in [0,1]");
    }
  }

  void require_seed() const {
    if (!seed) throw ConfigError("a seed is required for randomized runs");
  }

  void set(std::string_view key, std::string_view value);
  std::string to_text() const;
  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::string& path);
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const auto item = trim(v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline int parse_int(std::string_view text, std::string_view key) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': " + std::string(text));
  }
  return v;
}

}  // namespace detail

inline void ExperimentConfig::set(std::string_view key, std::string_view value) {
  value = detail::trim(value);
  if (key == "n") {
    n = detail::parse_int(value, key);
  } else if (key == "p") {
    p = parse_number(value, key);
  } else if (key == "rho") {
    rho = parse_number(value, key);
  } else if (key == "lambda") {
    lambda = parse_number(value, key);
  } else if (key == "nu") {
    nu = parse_number(value, key);
  } else if (key == "m") {
    arity = detail::parse_int(value, key);
  } else if (key == "width_cap") {
    width_cap = detail::parse_int(value, key);
  } else if (key == "samples") {
    samples = parse_unsigned(value, key);
  } else if (key == "seed") {
    seed = parse_unsigned(value, key);
  } else if (key == "tau") {
    tau = parse_number(value, key);
  } else if (key == "epsilon") {
    epsilon = parse_number(value, key);
  } else if (key == "eta") {
    eta = parse_number(value, key);
  } else if (key == "zeta") {
    zeta = parse_number(value, key);
  } else if (key == "trials") {
    trials = detail::parse_int(value, key);
  } else if (key == "and_size") {
    and_size = detail::parse_int(value, key);
  } else if (key == "levels") {
    levels.clear();
    for (const auto& item : detail::split_list(value)) levels.push_back(parse_number(item, key));
  } else if (key == "families") {
    families = detail::split_list(value);
  } else if (key == "output") {
    output = std::string(value);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

inline std::string ExperimentConfig::to_text() const {
  std::ostringstream out;
  auto join_numbers = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
    return s;
  };
  auto join_words = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  out << "n=" << n << '\n'
      << "p=" << format_number(p) << '\n'
      << "rho=" << format_number(rho) << '\n'
      << "lambda=" << format_number(lambda) << '\n'
      << "nu=" << format_number(nu) << '\n'
      << "m=" << arity << '\n'
      << "width_cap=" << width_cap << '\n'
      << "samples=" << samples << '\n';
  if (seed) out << "seed=" << *seed << '\n';
  out << "tau=" << format_number(tau) << '\n'
      << "epsilon=" << format_number(epsilon) << '\n'
      << "eta=" << format_number(eta) << '\n'
      << "zeta=" << format_number(zeta) << '\n'
      << "trials=" << trials << '\n'
      << "and_size=" << and_size << '\n'
      << "levels=" << join_numbers(levels) << '\n'
      << "families=" << join_words(families) << '\n';
  if (!output.empty()) out << "output=" << output << '\n';
  return out.str();
}

inline ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    cfg.set(detail::trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

inline ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace polyspec
