#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nashblow/cli/catalog.hpp"
#include "nashblow/cli/report.hpp"

namespace nashblow::cli {

// Report builders. Each throws NashError on invalid input or computation
// failure; a mathematical disagreement is reported through status instead.
Report semigroup_command(const CurveSpec& spec, std::optional<long> max);
Report regularity_command(const CurveSpec& spec, std::optional<long> upto);
Report matrix_command(long n, const std::vector<long>& a);
Report construct_command(const CurveSpec& spec, long n, bool show_fn, std::optional<long> j_max);
Report oracle_command(const CurveSpec& spec, long n, std::optional<long> degree);
Report charp_frobenius_command(const CurveSpec& spec, long p, long e);
Report charp_cusp_command(long p, long upto);
Report verify_command(std::vector<CurveSpec> catalog, const std::string& source, std::optional<long> j_max);

/// 0 for "ok" and "informational", 3 otherwise.
int exit_code_for(const Report& r);
/// 1 for usage-type errors, 2 for computation limits, 3 for internal errors.
int exit_code_for(ErrorCode code);

/// Parses a positive NASHBLOW_JMAX value; nullopt when unset. Throws Usage.
std::optional<long> jmax_from_environment();

/// Full command line without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nashblow::cli
