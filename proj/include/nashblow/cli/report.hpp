#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nashblow/arith.hpp"
#include "nashblow/semigroup.hpp"

namespace nashblow::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Integers within ±(2^53 - 1) as JSON numbers, larger ones as decimal strings.
Json json_int(const ExactInt& v);
/// Rationals as "num/den" strings (integers without a denominator).
Json json_rat(const ExactRat& v);

/// Every report has the same top-level keys in the same order; keys that do
/// not apply to a command are null. Rows share one column list, which is
/// also the CSV header.
struct Report {
  std::string command;
  Json input = Json::object();
  std::optional<NumericalSemigroup> semigroup;
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::optional<std::vector<long>> singular_indices;
  std::optional<long> stabilization_index;
  std::optional<bool> criterion_vs_construction;
  std::optional<bool> criterion_vs_oracle;
  std::string status = "ok";
  Json details = Json::object();

  void add_row(Json row);
};

Json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);
std::string render(const Report& r, const std::string& format);

}  // namespace nashblow::cli
