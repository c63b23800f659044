#include "nashblow/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nashblow/binom_matrix.hpp"
#include "nashblow/charp.hpp"
#include "nashblow/construction.hpp"
#include "nashblow/nash_curve.hpp"
#include "nashblow/oracle.hpp"

namespace nashblow::cli {

namespace {

Json poly_terms(const BivariatePoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e.first, e.second, c.to_string()}));
  return terms;
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

void require_characteristic_zero(const CurveSpec& spec) {
  if (spec.characteristic != 0) {
    fail(ErrorCode::Usage, spec.name + ": this command needs characteristic 0");
  }
}

Json curve_input(const CurveSpec& spec) {
  Json j = {{"curve", spec.name}, {"kind", spec.kind}, {"description", describe(spec)}};
  if (spec.truncation) j["truncation"] = *spec.truncation;
  j["characteristic"] = spec.characteristic;
  return j;
}

void fill_regularity(Report& r, const NumericalSemigroup& s) {
  r.semigroup = s;
  r.singular_indices = singular_indices(s);
  r.stabilization_index = stabilization_index(s);
}

}  // namespace

Report semigroup_command(const CurveSpec& spec, std::optional<long> max) {
  const NumericalSemigroup s = semigroup_of(spec);
  const long bound = max.value_or(s.conductor_number() + 2 * s.multiplicity());
  if (bound < 0) fail(ErrorCode::Usage, "--max must be non-negative");
  Report r;
  r.command = "semigroup";
  r.input = curve_input(spec);
  r.input["max"] = bound;
  r.semigroup = s;
  for (long n = 0; s.nth_element(n) <= bound; ++n) {
    r.add_row({{"n", n}, {"s_n", s.nth_element(n)}, {"l_n", s.l_n(n)}});
  }
  r.details["elements"] = s.elements_up_to(bound);
  r.details["multiplicity"] = s.multiplicity();
  r.details["delta"] = static_cast<long>(s.gaps().size());
  return r;
}

Report regularity_command(const CurveSpec& spec, std::optional<long> upto) {
  const NumericalSemigroup s = semigroup_of(spec);
  const long last = upto.value_or(stabilization_index(s) + 3);
  if (last < 0) fail(ErrorCode::Usage, "--upto must be non-negative");
  const RegularityReport rep = regularity_report(s, last);
  Report r;
  r.command = "regularity";
  r.input = curve_input(spec);
  r.input["upto"] = last;
  fill_regularity(r, s);
  for (const auto& row : rep.rows) {
    r.add_row({{"n", row.n},
               {"s_n", row.s_n},
               {"s_n_minus_1", row.s_n_minus_1},
               {"criterion_holds", row.criterion_holds},
               {"regular", row.regular},
               {"z_outside_conductor", row.z_outside_conductor}});
  }
  r.details["conductor_boundary_index"] = optional_long(rep.conductor_boundary_index);
  return r;
}

Report matrix_command(long n, const std::vector<long>& a) {
  const IndexSet idx(a);
  const ExactMatrix m = build_matrix(n, idx);
  Report r;
  r.command = "matrix";
  r.input = {{"n", n}, {"a", a}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string entries;
    for (std::size_t j = 0; j < m.cols(); ++j) entries += (j ? " " : "") + m.at(i, j).to_string();
    r.add_row({{"i", static_cast<long>(i)}, {"a_i", idx[i]}, {"entries", entries}});
  }
  const ExactRat closed = det_closed_form(n, idx);
  const ExactRat brute = det_bruteforce(m).rational();
  r.details["det_closed_form"] = json_rat(closed);
  r.details["det_bruteforce"] = json_rat(brute);
  r.details["determinants_agree"] = closed == brute;
  r.details["regular"] = closed != 0;
  if (closed != brute) r.status = "disagreement";
  return r;
}

Report construct_command(const CurveSpec& spec, long n, bool show_fn, std::optional<long> j_max) {
  require_characteristic_zero(spec);
  if (n < 0) fail(ErrorCode::Usage, "--n must be non-negative");
  const CurveAlgebra algebra = build_algebra(spec);
  const NumericalSemigroup& s = algebra.semigroup();
  const ConstructionState st = build_f_n(algebra, n, j_max);
  const DeformationCertificate cert = extract_g_n(st);
  const bool criterion = is_regular(s, n);

  Report r;
  r.command = "construct";
  r.input = curve_input(spec);
  r.input["n"] = n;
  fill_regularity(r, s);
  r.add_row({{"n", n},
             {"s_n", st.s_n},
             {"l_n", st.l_n},
             {"terminated_at", st.terminated_at},
             {"ord_g_n", optional_long(cert.ord_g_n)},
             {"construction_regular", cert.regular},
             {"criterion_regular", criterion}});
  r.criterion_vs_construction = cert.regular == criterion;
  r.details["j_max"] = st.j_max;
  r.details["j_max_source"] = j_max ? "explicit" : "heuristic default";
  r.details["nonzero_parts"] =
      static_cast<long>(std::count_if(st.parts.begin(), st.parts.end(), [](const auto& p) { return !p.is_zero(); }));
  r.details["g_n"] = cert.g_n.to_string();
  r.details["base_pattern_ok"] = st.base_pattern_ok;
  r.details["divisible"] = st.divisible;
  r.details["in_r_y"] = st.in_r_y;
  r.details["x_axis_ok"] = st.x_axis_ok;
  if (show_fn) {
    r.details["f_n"] = st.f_n.to_string();
    r.details["f_n_terms"] = poly_terms(st.f_n);
  }
  if (s.is_full()) {
    r.status = "informational";
  } else if (!*r.criterion_vs_construction || !st.all_checks_pass()) {
    r.status = "disagreement";
  }
  return r;
}

Report oracle_command(const CurveSpec& spec, long n, std::optional<long> degree) {
  require_characteristic_zero(spec);
  if (n < 0) fail(ErrorCode::Usage, "--n must be non-negative");
  const CurveAlgebra algebra = build_algebra(spec);
  const NumericalSemigroup& s = algebra.semigroup();
  const CalibratedOracle o = deformation_oracle_calibrated(algebra, n, degree);
  const OracleResult& res = o.primary;
  const bool criterion = is_regular(s, n);

  Report r;
  r.command = "oracle";
  r.input = curve_input(spec);
  r.input["n"] = n;
  r.input["degree"] = res.degree_bound;
  fill_regularity(r, s);
  r.add_row({{"n", n},
             {"s_n", res.s_n},
             {"degree", res.degree_bound},
             {"unknowns", res.unknowns},
             {"rank", res.rank},
             {"basis_dimension", res.basis_dimension},
             {"witness_g1_order", optional_long(res.witness_g1_order)},
             {"oracle_regular", res.regular},
             {"criterion_regular", criterion}});
  r.criterion_vs_oracle = res.regular == criterion;
  r.details["enlarged_degree"] = o.enlarged.degree_bound;
  r.details["enlarged_basis_dimension"] = o.enlarged.basis_dimension;
  r.details["constraints"] = res.constraints;
  r.details["a_n_order"] = optional_long(res.a_n_order);
  r.details["witness"] = res.witness ? Json(res.witness->to_string()) : Json(nullptr);
  if (!res.hypothesis_holds) {
    r.status = "informational";
  } else if (!*r.criterion_vs_oracle) {
    r.status = "disagreement";
  }
  return r;
}

Report charp_frobenius_command(const CurveSpec& spec, long p, long e) {
  if (e < 1) fail(ErrorCode::Usage, "--e must be at least 1");
  const NumericalSemigroup s = semigroup_of(spec);
  const long q = prime_power(p, e);
  const bool lucas = lucas_vanishing(p, e);
  const bool membership = frobenius_power_membership(s, p, e);
  std::optional<long> length;
  if (s.contains(q)) length = principal_quotient_length(s, q);

  Report r;
  r.command = "charp";
  r.input = curve_input(spec);
  r.input["p"] = p;
  r.input["e"] = e;
  r.semigroup = s;
  r.add_row({{"p", p},
             {"e", e},
             {"q", q},
             {"lucas_vanishing", lucas},
             {"frobenius_membership", membership},
             {"q_in_s", s.contains(q)},
             {"quotient_length", optional_long(length)},
             {"large_e", q >= s.conductor_number()}});
  r.details["frobenius_power"] = binomial_power_mod_p(p, q).to_string();
  const bool expected_membership = q < s.conductor_number() || membership;
  if (!lucas || !expected_membership || (length && *length != q)) r.status = "failed";
  return r;
}

Report charp_cusp_command(long p, long upto) {
  if (upto < 0) fail(ErrorCode::Usage, "--upto must be non-negative");
  Report r;
  r.command = "charp";
  r.input = {{"cusp", true}, {"p", p}, {"upto", upto}};
  r.semigroup = NumericalSemigroup::from_generators({2, 3});
  bool all = true;
  for (long n = 0; n <= upto; ++n) {
    const CharPWitness w = cusp_witness(p, n);
    std::string ideal;
    for (const auto& g : w.generators) ideal += (ideal.empty() ? "" : "; ") + g.to_string();
    r.add_row({{"p", p},
               {"n", n},
               {"case", w.case_description},
               {"ideal", ideal},
               {"membership", w.membership_verified},
               {"quotient_length", w.quotient_length},
               {"expected_length", w.expected_length},
               {"passed", w.passed()}});
    all = all && w.passed();
  }
  r.details["all_passed"] = all;
  if (!all) r.status = "failed";
  return r;
}

Report verify_command(std::vector<CurveSpec> catalog, const std::string& source, std::optional<long> j_max) {
  std::sort(catalog.begin(), catalog.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  Report r;
  r.command = "verify";
  r.input = {{"catalog", source}};
  bool construction_ok = true;
  bool oracle_ok = true;
  Json curves = Json::array();
  for (const auto& spec : catalog) {
    require_characteristic_zero(spec);
    const CurveAlgebra algebra = build_algebra(spec);
    const NumericalSemigroup& s = algebra.semigroup();
    const long stab = stabilization_index(s);
    const bool asserted = !s.is_full();
    for (long n = 0; n <= stab + 3; ++n) {
      const bool criterion = is_regular(s, n);
      const ConstructionState st = build_f_n(algebra, n, j_max);
      const bool construction = extract_g_n(st).regular;
      const bool oracle = deformation_oracle_calibrated(algebra, n).regular();
      const bool agree = construction == criterion && oracle == criterion && st.all_checks_pass();
      if (asserted) {
        construction_ok = construction_ok && construction == criterion && st.all_checks_pass();
        oracle_ok = oracle_ok && oracle == criterion;
      }
      r.add_row({{"curve", spec.name},
                 {"n", n},
                 {"s_n", s.nth_element(n)},
                 {"criterion", criterion},
                 {"construction", construction},
                 {"oracle", oracle},
                 {"checks", st.all_checks_pass()},
                 {"agree", agree}});
    }
    curves.push_back({{"name", spec.name},
                      {"description", describe(spec)},
                      {"generators", s.generators()},
                      {"frobenius", s.frobenius_number()},
                      {"singular_indices", singular_indices(s)},
                      {"stabilization_index", stab}});
  }
  r.criterion_vs_construction = construction_ok;
  r.criterion_vs_oracle = oracle_ok;
  r.details["curves"] = curves;
  if (!construction_ok || !oracle_ok) r.status = "disagreement";
  return r;
}

int exit_code_for(const Report& r) { return r.status == "ok" || r.status == "informational" ? 0 : 3; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NotInSemigroup:
      return 1;
    case ErrorCode::TruncationTooSmall:
    case ErrorCode::NonTermination:
    case ErrorCode::DegreeTooSmall:
      return 2;
    case ErrorCode::SingularMatrix:
    case ErrorCode::Internal:
      return 3;
  }
  return 3;
}

std::optional<long> jmax_from_environment() {
  const char* raw = std::getenv("NASHBLOW_JMAX");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) fail(ErrorCode::Usage, std::string("NASHBLOW_JMAX must be a positive integer, got ") + raw);
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity of higher Nash blowups of curve singularities"};
  app.name("nashblow");
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::vector<long> gens;
  std::string curve_file;
  std::string curve_name;
  std::optional<long> max, upto, degree, jmax;
  long n = 0;
  long p = 0;
  long e = 0;
  bool show_fn = false;
  bool cusp = false;
  bool builtin = false;
  std::string catalog_path;
  std::vector<long> index_set;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "write the report to this file");
  };
  auto curve_options = [&](CLI::App* sub) {
    sub->add_option("--gens", gens, "semigroup generators, comma separated")->delimiter(',');
    sub->add_option("--curve-file", curve_file, "catalog file");
    sub->add_option("--name", curve_name, "curve name in the catalog file or the builtin catalog");
  };

  auto* sg = app.add_subcommand("semigroup", "semigroup data and the l_n table");
  common(sg);
  curve_options(sg);
  sg->add_option("--max", max, "list elements up to this value");

  auto* reg = app.add_subcommand("regularity", "criterion verdicts for n = 0..upto");
  common(reg);
  curve_options(reg);
  reg->add_option("--upto", upto, "last n (default: stabilization index + 3)");

  auto* mat = app.add_subcommand("matrix", "binomial matrix M(n; a) and its determinant");
  common(mat);
  mat->add_option("--n", n, "n")->required();
  mat->add_option("--a", index_set, "strictly increasing positive indices")->delimiter(',')->required();

  auto* con = app.add_subcommand("construct", "build f_n and read off g_n");
  common(con);
  curve_options(con);
  con->add_option("--n", n, "n")->required();
  con->add_flag("--show-fn", show_fn, "include f_n in the report");
  con->add_option("--jmax", jmax, "termination cap for the recurrence");

  auto* orc = app.add_subcommand("oracle", "deformation test by linear algebra");
  common(orc);
  curve_options(orc);
  orc->add_option("--n", n, "n")->required();
  orc->add_option("--degree", degree, "degree bound D");

  auto* chp = app.add_subcommand("charp", "positive characteristic checks");
  common(chp);
  curve_options(chp);
  chp->add_option("--p", p, "prime")->required();
  chp->add_option("--e", e, "exponent");
  chp->add_flag("--cusp", cusp, "cusp witnesses for p = 2 or 3");
  chp->add_option("--upto", upto, "last n in cusp mode");

  auto* ver = app.add_subcommand("verify", "criterion, construction and oracle over a catalog");
  common(ver);
  ver->add_option("--catalog", catalog_path, "catalog file");
  ver->add_flag("--builtin", builtin, "use the builtin catalog");
  ver->add_option("--jmax", jmax, "termination cap for the recurrence");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: USAGE: " << ex.what() << "\n";
    return 1;
  }

  auto resolve_curve = [&]() -> CurveSpec {
    const int sources = !gens.empty() + !curve_file.empty() + (curve_file.empty() && !curve_name.empty());
    if (sources != 1) fail(ErrorCode::Usage, "give exactly one of --gens, --curve-file with --name, or --name");
    if (!gens.empty()) return monomial_spec(gens);
    if (!curve_file.empty()) {
      if (curve_name.empty()) fail(ErrorCode::Usage, "--curve-file needs --name");
      return find_curve(load_catalog(curve_file), curve_name);
    }
    return find_curve(builtin_catalog(), curve_name);
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!jmax) jmax = jmax_from_environment();
    Report report;
    if (sg->parsed()) {
      report = semigroup_command(resolve_curve(), max);
    } else if (reg->parsed()) {
      report = regularity_command(resolve_curve(), upto);
    } else if (mat->parsed()) {
      report = matrix_command(n, index_set);
    } else if (con->parsed()) {
      report = construct_command(resolve_curve(), n, show_fn, jmax);
    } else if (orc->parsed()) {
      report = oracle_command(resolve_curve(), n, degree);
    } else if (chp->parsed()) {
      if (cusp) {
        if (!upto) fail(ErrorCode::Usage, "--cusp needs --upto");
        report = charp_cusp_command(p, *upto);
      } else {
        if (e == 0) fail(ErrorCode::Usage, "charp needs --e or --cusp");
        report = charp_frobenius_command(resolve_curve(), p, e);
      }
    } else {
      if (builtin == !catalog_path.empty()) fail(ErrorCode::Usage, "give exactly one of --builtin or --catalog");
      report = builtin ? verify_command(builtin_catalog(), "builtin", jmax)
                       : verify_command(load_catalog(catalog_path), catalog_path, jmax);
    }

    const std::string text = render(report, format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) fail(ErrorCode::Usage, "cannot write " + out_path);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed: " << secs << " s\n";
    const int code = exit_code_for(report);
    if (code != 0) err << "error: " << report.command << " reported status " << report.status << "\n";
    return code;
  } catch (const NashError& ex) {
    err << "error: " << to_string(ex.code()) << ": " << ex.what() << "\n";
    return exit_code_for(ex.code());
  } catch (const std::exception& ex) {
    err << "error: INTERNAL: " << ex.what() << "\n";
    return 3;
  }
}

}  // namespace nashblow::cli
