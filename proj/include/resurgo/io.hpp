#pragma once

#include <filesystem>
#include <string>

#include "resurgo/perturbative.hpp"

namespace resurgo {

inline constexpr const char* kSchemaTag = "resurgo-v1";

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t line, size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational-function expressions over z: +, -, *, /, ^ with Gaussian-rational
// literals ("3/4", "1/2i", "2-3i") and parentheses.
RatFunc parse_ratfunc(const std::string& text);
GaussianRational parse_rational_literal(const std::string& text);

// On-disk problem description:
//   {"order": N, "coeffs": [...N+1 strings or coefficient lists...],
//    "forcing": [...], "precision_bits": int, "series_order": int,
//    "singulants": [optional explicit chi expressions for stokes]}
struct SpecFile {
  ODESpec ode;
  Precision precision_bits = 256;
  int series_order = 200;
  std::vector<RatFunc> explicit_singulants;
  bool has_ode = true;
};

SpecFile load_spec_file(const std::filesystem::path& path);
SpecFile parse_spec_json(const std::string& text);
std::string spec_to_json(const SpecFile& spec);

// JSON string fragments for values; exact rationals keep their literal form.
std::string json_complex(const BigComplex& v, size_t digits = 0);

}  // namespace resurgo
