#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nashblow/semigroup.hpp"

namespace nashblow {

/// Characteristic-0 regularity of Nash_n(X) for a curve with value semigroup
/// S: regular iff s_n - 1 ∈ S.
bool is_regular(const NumericalSemigroup& s, long n);

/// All n with s_n - 1 ∉ S, ascending. Finite: once s_n exceeds the
/// conductor, s_n - 1 is at least the conductor and lies in S.
std::vector<long> singular_indices(const NumericalSemigroup& s);

/// Least n0 with Nash_n regular for every n >= n0.
long stabilization_index(const NumericalSemigroup& s);

/// True iff the fiber Z_n is not contained in the conductor subscheme, i.e.
/// the ideal {f : ord f >= s_n} does not contain (x^i : i > t_l). Equivalent
/// to s_n > t_l + 1.
bool z_outside_conductor(const NumericalSemigroup& s, long n);

struct JacobianConductorCheck {
  long a = 0;
  long b = 0;
  /// Valuations of the partial derivatives of u^b - v^a along u = t^a, v = t^b.
  std::array<long, 2> jacobian_valuations{};
  long conductor_number = 0;
  /// Conductor of <a, b> computed from the semigroup table.
  long semigroup_conductor = 0;
  bool inclusion_holds = false;
};

/// Jacobian ideal inside the conductor for the plane curve u^b = v^a.
/// Requires 2 <= a < b and gcd(a, b) = 1.
JacobianConductorCheck jacobian_conductor_check(long a, long b);

struct RegularityRow {
  long n = 0;
  long s_n = 0;
  long s_n_minus_1 = 0;
  bool criterion_holds = false;
  bool regular = false;
  bool z_outside_conductor = false;
};

struct RegularityReport {
  NumericalSemigroup semigroup;
  std::vector<RegularityRow> rows;
  std::vector<long> singular_indices;
  long stabilization_index = 0;
  /// Largest singular index: there Z_n equals the conductor subscheme.
  std::optional<long> conductor_boundary_index;
};

RegularityReport regularity_report(const NumericalSemigroup& s, long upto);

}  // namespace nashblow
