#include "nashblow/cli/report.hpp"

#include <sstream>

namespace nashblow::cli {

namespace {

const ExactInt kMaxSafe("9007199254740991");

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json json_int(const ExactInt& v) {
  if (abs(v) <= kMaxSafe) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_rat(const ExactRat& v) { return Json(to_string(v)); }

void Report::add_row(Json row) {
  if (columns.empty()) {
    for (const auto& item : row.items()) columns.push_back(item.key());
  }
  Json ordered = Json::object();
  for (const auto& c : columns) {
    if (!row.contains(c)) fail(ErrorCode::Internal, "report row is missing column " + c);
    ordered[c] = row[c];
  }
  if (ordered.size() != row.size()) fail(ErrorCode::Internal, "report row has extra columns");
  rows.push_back(std::move(ordered));
}

Json to_json(const Report& r) {
  Json j = Json::object();
  j["version"] = kVersion;
  j["command"] = r.command;
  j["input"] = r.input;
  if (r.semigroup) {
    const auto& s = *r.semigroup;
    j["semigroup"] = {{"generators", s.generators()},
                      {"gaps", s.gaps()},
                      {"frobenius", s.frobenius_number()},
                      {"conductor", s.conductor_number()}};
  } else {
    j["semigroup"] = nullptr;
  }
  j["rows"] = Json::array();
  for (const auto& row : r.rows) j["rows"].push_back(row);
  j["singular_indices"] = optional_json(r.singular_indices);
  j["stabilization_index"] = optional_json(r.stabilization_index);
  j["agreement"] = {{"criterion_vs_construction", optional_json(r.criterion_vs_construction)},
                    {"criterion_vs_oracle", optional_json(r.criterion_vs_oracle)}};
  j["status"] = r.status;
  j["details"] = r.details;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_csv(const Report& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(Json(r.columns[i]));
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(row[r.columns[i]]);
    out << "\n";
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "nashblow " << kVersion << " " << r.command << "\n";
  if (!r.input.empty()) out << "input: " << r.input.dump() << "\n";
  if (r.semigroup) {
    const auto& s = *r.semigroup;
    out << "semigroup: generators " << Json(s.generators()).dump() << ", gaps " << Json(s.gaps()).dump()
        << ", frobenius " << s.frobenius_number() << ", conductor " << s.conductor_number() << "\n";
  }
  if (!r.rows.empty()) {
    std::vector<std::size_t> width;
    for (const auto& c : r.columns) width.push_back(c.size());
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) {
        width[i] = std::max(width[i], scalar_text(row[r.columns[i]]).size());
      }
    }
    auto line = [&](auto cell) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) {
        const std::string s = cell(i);
        out << (i ? "  " : "") << s;
        if (i + 1 < r.columns.size()) out << std::string(width[i] - s.size(), ' ');
      }
      out << "\n";
    };
    line([&](std::size_t i) { return r.columns[i]; });
    for (const auto& row : r.rows) line([&](std::size_t i) { return scalar_text(row[r.columns[i]]); });
  }
  if (r.singular_indices) out << "singular_indices: " << Json(*r.singular_indices).dump() << "\n";
  if (r.stabilization_index) out << "stabilization_index: " << *r.stabilization_index << "\n";
  if (r.criterion_vs_construction) {
    out << "criterion_vs_construction: " << (*r.criterion_vs_construction ? "agree" : "DISAGREE") << "\n";
  }
  if (r.criterion_vs_oracle) out << "criterion_vs_oracle: " << (*r.criterion_vs_oracle ? "agree" : "DISAGREE") << "\n";
  for (const auto& item : r.details.items()) out << item.key() << ": " << scalar_text(item.value()) << "\n";
  out << "status: " << r.status << "\n";
  return out.str();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "csv") return render_csv(r);
  if (format == "text") return render_text(r);
  fail(ErrorCode::Usage, "unknown format " + format);
}

}  // namespace nashblow::cli
