#include "nashblow/cli/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nashblow::cli {

namespace {

using nlohmann::json;

CurveSpec general_spec(std::string name, std::vector<std::vector<SeriesTerm>> gens, long truncation) {
  CurveSpec spec;
  spec.name = std::move(name);
  spec.kind = "general";
  spec.series_generators = std::move(gens);
  spec.truncation = truncation;
  return spec;
}

long as_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(ErrorCode::Usage, what + " must be an integer");
  return j.get<long>();
}

CurveSpec parse_curve(const json& j) {
  if (!j.is_object()) fail(ErrorCode::Usage, "catalog entry must be an object");
  CurveSpec spec;
  if (!j.contains("name") || !j["name"].is_string()) fail(ErrorCode::Usage, "catalog entry needs a string name");
  spec.name = j["name"].get<std::string>();
  spec.kind = j.value("kind", std::string("monomial"));
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    fail(ErrorCode::Usage, spec.name + ": generators must be a non-empty list");
  }
  if (spec.kind == "monomial") {
    for (const auto& g : j["generators"]) spec.monomial_generators.push_back(as_long(g, spec.name + ": generator"));
  } else if (spec.kind == "general") {
    for (const auto& g : j["generators"]) {
      if (!g.is_array() || g.empty()) fail(ErrorCode::Usage, spec.name + ": general generator must be a list of terms");
      std::vector<SeriesTerm> terms;
      for (const auto& t : g) {
        if (!t.is_array() || t.size() != 3) {
          fail(ErrorCode::Usage, spec.name + ": term must be [exponent, numerator, denominator]");
        }
        const long e = as_long(t[0], spec.name + ": exponent");
        const long num = as_long(t[1], spec.name + ": numerator");
        const long den = as_long(t[2], spec.name + ": denominator");
        if (e < 0 || den == 0) fail(ErrorCode::Usage, spec.name + ": bad term");
        ExactRat c(num, den);
        c.canonicalize();
        terms.push_back({e, c});
      }
      spec.series_generators.push_back(std::move(terms));
    }
  } else {
    fail(ErrorCode::Usage, spec.name + ": kind must be \"monomial\" or \"general\"");
  }
  if (j.contains("truncation")) {
    spec.truncation = as_long(j["truncation"], spec.name + ": truncation");
    if (*spec.truncation < 0) fail(ErrorCode::Usage, spec.name + ": truncation must be non-negative");
  }
  if (j.contains("characteristic")) {
    spec.characteristic = as_long(j["characteristic"], spec.name + ": characteristic");
    if (spec.characteristic != 0) Field::prime(static_cast<std::uint64_t>(std::max(spec.characteristic, 0L)));
  }
  return spec;
}

}  // namespace

std::vector<CurveSpec> builtin_catalog() {
  std::vector<CurveSpec> out;
  for (const auto& gens : std::vector<std::vector<long>>{
           {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 7}, {4, 6, 7}, {3, 7, 8}}) {
    out.push_back(monomial_spec(gens));
  }
  out.push_back(general_spec("x3_x4+x5", {{{3, ExactRat(1)}}, {{4, ExactRat(1)}, {5, ExactRat(1)}}}, 40));
  return out;
}

CurveSpec monomial_spec(std::vector<long> generators) {
  CurveSpec spec;
  spec.kind = "monomial";
  for (std::size_t i = 0; i < generators.size(); ++i) spec.name += (i ? "_" : "S") + std::to_string(generators[i]);
  spec.monomial_generators = std::move(generators);
  return spec;
}

std::vector<CurveSpec> parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Usage, std::string("catalog is not valid JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("curves")) fail(ErrorCode::Usage, "catalog object needs a \"curves\" list");
    list = &doc["curves"];
  }
  if (!list->is_array()) fail(ErrorCode::Usage, "catalog must be a list of curves");
  std::vector<CurveSpec> out;
  std::set<std::string> names;
  for (const auto& entry : *list) {
    CurveSpec spec = parse_curve(entry);
    if (!names.insert(spec.name).second) fail(ErrorCode::Usage, "duplicate curve name " + spec.name);
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<CurveSpec> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Usage, "cannot read catalog " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

const CurveSpec& find_curve(const std::vector<CurveSpec>& catalog, const std::string& name) {
  for (const auto& spec : catalog) {
    if (spec.name == name) return spec;
  }
  fail(ErrorCode::Usage, "no curve named " + name);
}

CurveAlgebra build_algebra(const CurveSpec& spec) {
  const Field field = spec.characteristic == 0 ? Field::rationals()
                                               : Field::prime(static_cast<std::uint64_t>(spec.characteristic));
  if (spec.is_monomial()) {
    return CurveAlgebra::monomial(NumericalSemigroup::from_generators(spec.monomial_generators), field);
  }
  const long trunc = spec.truncation.value_or(kDefaultTruncation);
  std::vector<TruncatedSeries> gens;
  for (const auto& terms : spec.series_generators) {
    TruncatedSeries g(field, trunc);
    for (const auto& t : terms) g.add_to(t.exponent, Coefficient::from_rat(field, t.coefficient));
    gens.push_back(std::move(g));
  }
  return CurveAlgebra::general(gens, trunc);
}

NumericalSemigroup semigroup_of(const CurveSpec& spec) {
  if (spec.is_monomial()) return NumericalSemigroup::from_generators(spec.monomial_generators);
  return build_algebra(spec).semigroup();
}

std::string describe(const CurveSpec& spec) {
  std::string out;
  if (spec.is_monomial()) {
    for (long g : spec.monomial_generators) out += (out.empty() ? "<" : ",") + std::to_string(g);
    return out + ">";
  }
  for (const auto& terms : spec.series_generators) {
    std::string g;
    for (const auto& t : terms) {
      if (!g.empty()) g += " + ";
      if (t.coefficient != 1) g += to_string(t.coefficient) + "*";
      g += "x^" + std::to_string(t.exponent);
    }
    out += (out.empty() ? "" : ", ") + g;
  }
  return "k[[" + out + "]]";
}

}  // namespace nashblow::cli
