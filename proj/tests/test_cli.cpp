#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nashblow/cli/commands.hpp"

using namespace nashblow;
using namespace nashblow::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string data(const std::string& file) { return std::string(NASHBLOW_TEST_DATA) + "/" + file; }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

TEST_CASE("semigroup command") {
  const Json j = run_json({"semigroup", "--gens", "5,7"});
  CHECK(j["semigroup"]["frobenius"] == 23);
  CHECK(j["semigroup"]["conductor"] == 24);
  CHECK(j["semigroup"]["generators"] == Json::array({5, 7}));
  CHECK(j["semigroup"]["gaps"].size() == 12);
  CHECK(run_json({"semigroup", "--gens", "1"})["semigroup"]["frobenius"] == -1);
  const Run bad = run({"semigroup", "--gens", "4,6"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("gcd") != std::string::npos);
}

TEST_CASE("report keys are fixed and ordered") {
  const Json j = run_json({"regularity", "--gens", "5,7", "--upto", "15"});
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"version", "command", "input", "semigroup", "rows", "singular_indices",
                                         "stabilization_index", "agreement", "status", "details"});
  std::vector<std::string> sg_keys;
  for (const auto& item : j["semigroup"].items()) sg_keys.push_back(item.key());
  CHECK(sg_keys == std::vector<std::string>{"generators", "gaps", "frobenius", "conductor"});
  CHECK(j["agreement"].contains("criterion_vs_construction"));
  CHECK(j["agreement"].contains("criterion_vs_oracle"));
}

TEST_CASE("regularity command") {
  const Json j = run_json({"regularity", "--gens", "5,7", "--upto", "15"});
  CHECK(j["singular_indices"] == Json::array({0, 1, 2, 3, 4, 6, 7, 11}));
  CHECK(j["stabilization_index"] == 12);
  CHECK(j["rows"].size() == 16);
  const Json full = run_json({"regularity", "--gens", "1", "--upto", "5"});
  for (const auto& row : full["rows"]) CHECK(row["regular"] == true);
  const Json cusp = run_json({"regularity", "--gens", "2,3", "--upto", "5"});
  CHECK(cusp["singular_indices"] == Json::array({0}));
  CHECK(cusp["rows"][0]["regular"] == false);
}

TEST_CASE("construct command") {
  const Json j = run_json({"construct", "--gens", "2,3", "--n", "0", "--show-fn"});
  CHECK(j["details"]["f_n"] == "x^2 - y^2");
  CHECK(j["rows"][0]["construction_regular"] == false);
  CHECK(j["agreement"]["criterion_vs_construction"] == true);
  const Json k = run_json({"construct", "--gens", "5,7", "--n", "5"});
  CHECK(k["rows"][0]["construction_regular"] == true);
  CHECK(k["agreement"]["criterion_vs_construction"] == true);
  CHECK(k["status"] == "ok");
  const Json full = run_json({"construct", "--gens", "1", "--n", "2"});
  CHECK(full["status"] == "informational");
  const Json gen = run_json({"construct", "--name", "x3_x4+x5", "--n", "1", "--show-fn"});
  CHECK(gen["rows"][0]["construction_regular"] == true);
  CHECK(gen["details"]["nonzero_parts"].get<long>() > 1);
  CHECK(run({"construct", "--gens", "2,3", "--n", "-1"}).code == 1);
}

TEST_CASE("oracle command") {
  CHECK(run_json({"oracle", "--gens", "2,3", "--n", "1"})["rows"][0]["oracle_regular"] == true);
  const Json s = run_json({"oracle", "--gens", "5,7", "--n", "11"});
  CHECK(s["rows"][0]["oracle_regular"] == false);
  CHECK(s["agreement"]["criterion_vs_oracle"] == true);
  CHECK(run_json({"oracle", "--gens", "3,4", "--n", "0"})["rows"][0]["oracle_regular"] == false);
  CHECK(run({"oracle", "--gens", "3,4", "--n", "0", "--degree", "3"}).code == 1);
}

TEST_CASE("matrix command") {
  const Json j = run_json({"matrix", "--n", "1", "--a", "1,2"});
  CHECK(j["details"]["det_closed_form"] == "1");
  CHECK(j["details"]["determinants_agree"] == true);
  CHECK(j["rows"][1]["entries"] == "0 1");
  CHECK(run({"matrix", "--n", "1", "--a", "2,1"}).code == 1);
}

TEST_CASE("charp command") {
  const Json cusp = run_json({"charp", "--cusp", "--p", "2", "--upto", "10"});
  CHECK(cusp["rows"].size() == 11);
  for (const auto& row : cusp["rows"]) CHECK(row["passed"] == true);
  const Json big = run_json({"charp", "--gens", "5,7", "--p", "2", "--e", "5"});
  CHECK(big["rows"][0]["frobenius_membership"] == true);
  CHECK(big["rows"][0]["quotient_length"] == 32);
  const Json small = run_json({"charp", "--gens", "5,7", "--p", "2", "--e", "2"});
  CHECK(small["rows"][0]["frobenius_membership"] == false);
  CHECK(small["status"] == "ok");
  CHECK(run({"charp", "--cusp", "--p", "5", "--upto", "3"}).code == 1);
  CHECK(run({"charp", "--gens", "5,7", "--p", "6", "--e", "1"}).code == 1);
}

TEST_CASE("verify command and catalog files") {
  const Run ok = run({"verify", "--builtin", "--format", "json"});
  REQUIRE(ok.code == 0);
  const Json j = Json::parse(ok.out);
  CHECK(j["agreement"]["criterion_vs_construction"] == true);
  CHECK(j["agreement"]["criterion_vs_oracle"] == true);
  for (const auto& row : j["rows"]) CHECK(row["agree"] == true);
  // Rows are sorted by curve name, then n.
  for (std::size_t i = 1; i < j["rows"].size(); ++i) {
    const auto& a = j["rows"][i - 1];
    const auto& b = j["rows"][i];
    CHECK((a["curve"].get<std::string>() < b["curve"].get<std::string>() ||
           (a["curve"] == b["curve"] && a["n"].get<long>() < b["n"].get<long>())));
  }

  CHECK(run({"verify", "--catalog", data("sample.json")}).code == 0);
  CHECK(run({"verify", "--catalog", data("corrupted.json")}).code == 1);
  const Run small = run({"verify", "--catalog", data("small_truncation.json")});
  CHECK(small.code == 2);
  CHECK(small.err.find("TRUNCATION_TOO_SMALL") != std::string::npos);
  CHECK(run({"verify", "--catalog", data("missing.json")}).code == 1);
  CHECK(run({"verify"}).code == 1);
  CHECK(run({"semigroup", "--curve-file", data("sample.json"), "--name", "e6"}).code == 0);
  CHECK(run({"semigroup", "--curve-file", data("sample.json"), "--name", "nope"}).code == 1);
}

TEST_CASE("catalog parsing") {
  CHECK(parse_catalog(R"([{"name": "a", "generators": [2, 3]}])").size() == 1);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "a", "generators": [2, 3]}, {"name": "a", "generators": [3, 4]}])"),
                  NashError);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "a", "kind": "weird", "generators": [2, 3]}])"), NashError);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "a", "kind": "general", "generators": [[[3, 1]]]}])"), NashError);
  CHECK_THROWS_AS(parse_catalog(R"({"nope": []})"), NashError);
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "a", "generators": [2, 3], "characteristic": 4}])"), NashError);
  const auto specs = parse_catalog(R"([{"name": "p", "generators": [2, 3], "characteristic": 2}])");
  try {
    verify_command(specs, "inline", std::nullopt);
    FAIL("expected Usage");
  } catch (const NashError& e) {
    CHECK(e.code() == ErrorCode::Usage);
  }
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"regularity", "--gens", "5,7", "--upto", "15", "--format", "json"},
           {"construct", "--name", "x3_x4+x5", "--n", "2", "--show-fn", "--format", "json"},
           {"oracle", "--gens", "4,6,7", "--n", "3", "--format", "json"},
           {"charp", "--cusp", "--p", "3", "--upto", "6", "--format", "json"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("CSV rows equal JSON rows") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"regularity", "--gens", "5,7", "--upto", "15"},
           {"charp", "--cusp", "--p", "3", "--upto", "6"},
           {"verify", "--catalog", data("sample.json")}}) {
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const Json j = Json::parse(run(json_args).out);
    std::istringstream csv(run(csv_args).out);
    std::string line;
    std::getline(csv, line);
    const auto header = split_csv_line(line);
    std::size_t i = 0;
    while (std::getline(csv, line)) {
      REQUIRE(i < j["rows"].size());
      const auto cells = split_csv_line(line);
      REQUIRE(cells.size() == header.size());
      for (std::size_t c = 0; c < header.size(); ++c) CHECK(cells[c] == cell_text(j["rows"][i][header[c]]));
      ++i;
    }
    CHECK(i == j["rows"].size());
  }
}

TEST_CASE("--out writes the same report") {
  const auto path = std::filesystem::temp_directory_path() / "nashblow_out_test.json";
  const Run direct = run({"regularity", "--gens", "3,5", "--format", "json"});
  const Run to_file = run({"regularity", "--gens", "3,5", "--format", "json", "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("NASHBLOW_JMAX") {
  setenv("NASHBLOW_JMAX", "1", 1);
  const Run capped = run({"construct", "--name", "x3_x4+x5", "--n", "1"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("NON_TERMINATION") != std::string::npos);
  setenv("NASHBLOW_JMAX", "abc", 1);
  CHECK(run({"construct", "--gens", "2,3", "--n", "1"}).code == 1);
  unsetenv("NASHBLOW_JMAX");
  CHECK(run({"construct", "--name", "x3_x4+x5", "--n", "1"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"regularity"}).code == 1);
  CHECK(run({"regularity", "--gens", "2,3", "--name", "S2_3"}).code == 1);
  CHECK(run({"regularity", "--gens", "2,3", "--format", "xml"}).code == 1);
  CHECK(run({"regularity", "--gens", "2,3", "--format", "text"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("large integers are emitted as strings") {
  CHECK(json_int(ExactInt(42)) == Json(42));
  CHECK(json_int(ExactInt("9007199254740991")).is_number());
  CHECK(json_int(ExactInt("9007199254740992")) == Json("9007199254740992"));
  CHECK(json_int(ExactInt("-9007199254740992")) == Json("-9007199254740992"));
  CHECK(json_rat(ExactRat(3, 6)) == Json("1/2"));
}
