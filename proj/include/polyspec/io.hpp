#pragma once

// JSON file formats.
//
//   {"n": 2, "kind": "boolean", "bits_hex": "8"}
//   {"n": 1, "kind": "bounded", "values": [0.25, 0.75]}
//   {"n": 1, "kind": "real",    "values": [-1.0, 2.0]}
//   {"n": 1, "kind": "spectrum", "p": 0.5, "coeffs": [0.5, 0.5]}
//
// bits_hex is the truth table read as one integer sum_x f(x) 2^x, printed
// most significant digit first and zero-padded to ceil(2^n / 4) digits.
// Value arrays are in PointIndex order.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "polyspec/core.hpp"
#include "polyspec/fourier.hpp"

namespace polyspec {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_bits_hex(const BooleanFunction& f) {
  const std::size_t digits = std::max<std::size_t>(1, (f.size() + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t x = 4 * d + b;
      if (x < f.size() && f(static_cast<PointIndex>(x))) nibble |= 1u << b;
    }
    out[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return out;
}

inline BooleanFunction from_bits_hex(int n, const std::string& hex) {
  check_dimension(n, kMaxBooleanDim, "bits_hex");
  const std::size_t size = cube_size(n);
  const std::size_t digits = std::max<std::size_t>(1, (size + 3) / 4);
  if (hex.size() != digits) {
    throw FormatError("bits_hex: expected " + std::to_string(digits) + " hex digits, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words((size + 63) / 64, 0);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw FormatError(std::string("bits_hex: invalid digit '") + c + "'");
    }
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t x = 4 * d + b;
      if (!(nibble & (1u << b))) continue;
      if (x >= size) throw FormatError("bits_hex: bits set beyond the table");
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  return BooleanFunction::from_words(n, std::move(words));
}

using AnyFunction = std::variant<BooleanFunction, BoundedFunction, RealTable>;

inline nlohmann::json values_json(std::span<const double> v) { return nlohmann::json(std::vector<double>(v.begin(), v.end())); }

inline nlohmann::json to_json(const BooleanFunction& f) {
  return {{"n", f.dimension()}, {"kind", "boolean"}, {"bits_hex", to_bits_hex(f)}};
}

inline nlohmann::json to_json(const BoundedFunction& f) {
  return {{"n", f.dimension()}, {"kind", "bounded"}, {"values", values_json(f.values())}};
}

inline nlohmann::json to_json(const RealTable& t) {
  return {{"n", t.dimension()}, {"kind", "real"}, {"values", values_json(t.values())}};
}

inline nlohmann::json to_json(const Spectrum& s) {
  return {{"n", s.dimension()}, {"kind", "spectrum"}, {"p", s.bias()}, {"coeffs", values_json(s.coeffs())}};
}

inline nlohmann::json to_json(const AnyFunction& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f);
}

namespace detail {

inline int dimension_for(const nlohmann::json& j, std::size_t count) {
  int n = 0;
  while (cube_size(n) < count && n < kMaxBooleanDim) ++n;
  if (cube_size(n) != count) throw FormatError("value count " + std::to_string(count) + " is not a power of two");
  if (j.contains("n") && j.at("n").get<int>() != n) throw FormatError("declared n does not match value count");
  return n;
}

}  // namespace detail

inline AnyFunction function_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "boolean") return from_bits_hex(j.at("n").get<int>(), j.at("bits_hex").get<std::string>());
    if (kind == "bounded" || kind == "real") {
      auto values = j.at("values").get<std::vector<double>>();
      const int n = detail::dimension_for(j, values.size());
      RealTable t(n, std::move(values));
      if (kind == "real") return t;
      return BoundedFunction(std::move(t));
    }
    throw FormatError("unknown function kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed function JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline Spectrum spectrum_from_json(const nlohmann::json& j) {
  try {
    if (j.at("kind").get<std::string>() != "spectrum") throw FormatError("expected kind 'spectrum'");
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    const int n = detail::dimension_for(j, coeffs.size());
    return Spectrum(n, j.at("p").get<double>(), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed spectrum JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline nlohmann::json read_json(const std::string& path, std::istream& stdin_stream = std::cin) {
  try {
    if (path == "-") return nlohmann::json::parse(stdin_stream);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

inline void write_json(const std::string& path, const nlohmann::json& j, std::ostream& stdout_stream = std::cout) {
  if (path == "-" || path.empty()) {
    stdout_stream << j.dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump() << '\n';
}

// Boolean-valued tables in any format, for operations that need 0/1 input.
inline BooleanFunction as_boolean(const AnyFunction& f) {
  if (const auto* b = std::get_if<BooleanFunction>(&f)) return *b;
  const RealTable& t = std::holds_alternative<BoundedFunction>(f) ? std::get<BoundedFunction>(f).table() : std::get<RealTable>(f);
  try {
    return BooleanFunction::from_table(t);
  } catch (const std::invalid_argument&) {
    throw FormatError("function must be Boolean (0/1 valued)");
  }
}

inline BoundedFunction as_bounded(const AnyFunction& f) {
  if (const auto* b = std::get_if<BooleanFunction>(&f)) return BoundedFunction(*b);
  if (const auto* b = std::get_if<BoundedFunction>(&f)) return *b;
  try {
    return BoundedFunction(std::get<RealTable>(f));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace polyspec
