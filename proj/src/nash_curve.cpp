#include "nashblow/nash_curve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nashblow/error.hpp"

namespace nashblow {

bool is_regular(const NumericalSemigroup& s, long n) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  return s.contains(s.nth_element(n) - 1);
}

std::vector<long> singular_indices(const NumericalSemigroup& s) {
  std::vector<long> out;
  for (long n = 0; s.nth_element(n) <= s.conductor_number(); ++n) {
    if (!is_regular(s, n)) out.push_back(n);
  }
  return out;
}

long stabilization_index(const NumericalSemigroup& s) {
  const auto singular = singular_indices(s);
  return singular.empty() ? 0 : singular.back() + 1;
}

bool z_outside_conductor(const NumericalSemigroup& s, long n) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  return s.nth_element(n) > s.frobenius_number() + 1;
}

JacobianConductorCheck jacobian_conductor_check(long a, long b) {
  if (a < 2 || b <= a) fail(ErrorCode::Usage, "jacobian check requires 2 <= a < b");
  if (std::gcd(a, b) != 1) {
    fail(ErrorCode::Usage, "a = " + std::to_string(a) + " and b = " + std::to_string(b) + " are not coprime");
  }
  JacobianConductorCheck r;
  r.a = a;
  r.b = b;
  // d/du (u^b - v^a) = b u^{b-1}, d/dv = -a v^{a-1}; nonzero constants in
  // characteristic 0, so only the monomial valuations matter.
  r.jacobian_valuations = {a * (b - 1), b * (a - 1)};
  r.conductor_number = (a - 1) * (b - 1);
  r.semigroup_conductor = NumericalSemigroup::from_generators({a, b}).conductor_number();
  r.inclusion_holds = std::all_of(r.jacobian_valuations.begin(), r.jacobian_valuations.end(),
                                  [&](long v) { return v >= r.conductor_number; });
  return r;
}

RegularityReport regularity_report(const NumericalSemigroup& s, long upto) {
  if (upto < 0) fail(ErrorCode::Usage, "upto must be non-negative");
  RegularityReport report{s, {}, singular_indices(s), stabilization_index(s), std::nullopt};
  if (!report.singular_indices.empty()) report.conductor_boundary_index = report.singular_indices.back();
  for (long n = 0; n <= upto; ++n) {
    RegularityRow row;
    row.n = n;
    row.s_n = s.nth_element(n);
    row.s_n_minus_1 = row.s_n - 1;
    row.criterion_holds = s.contains(row.s_n_minus_1);
    row.regular = is_regular(s, n);
    row.z_outside_conductor = z_outside_conductor(s, n);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace nashblow
