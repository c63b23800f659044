#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashblow/algebra.hpp"

namespace nashblow::cli {

/// One term c x^e of a general generator.
struct SeriesTerm {
  long exponent = 0;
  ExactRat coefficient;
};

struct CurveSpec {
  std::string name;
  std::string kind;  // "monomial" or "general"
  std::vector<long> monomial_generators;
  std::vector<std::vector<SeriesTerm>> series_generators;
  std::optional<long> truncation;
  long characteristic = 0;

  bool is_monomial() const { return kind == "monomial"; }
};

/// Truncation used for general curves that do not state one.
inline constexpr long kDefaultTruncation = 40;

std::vector<CurveSpec> builtin_catalog();

/// Parses {"curves": [...]} or a bare array. Throws Usage on malformed input
/// or duplicate names.
std::vector<CurveSpec> parse_catalog(const std::string& text);
std::vector<CurveSpec> load_catalog(const std::string& path);

const CurveSpec& find_curve(const std::vector<CurveSpec>& catalog, const std::string& name);

CurveSpec monomial_spec(std::vector<long> generators);

/// Builds the algebra over Q or F_p as the characteristic dictates.
CurveAlgebra build_algebra(const CurveSpec& spec);
NumericalSemigroup semigroup_of(const CurveSpec& spec);

/// "<5,7>" for monomial curves, "k[[x^3, x^4 + x^5]]" for general ones.
std::string describe(const CurveSpec& spec);

}  // namespace nashblow::cli
