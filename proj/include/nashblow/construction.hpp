#pragma once

// Explicit generators f_n of the symbolic power I^{(n+1)} ⊆ R[[y]] and the
// first-order deformation coefficient g_n read off from them.
//
// f_n = sum_j f_{n,j}, where f_{n,j} is homogeneous of degree s_n + j and
// divisible by (x+y)^{n+1}. Writing c_{i,j} for the coefficient of
// x^i y^{s_n+j-i} in f_{n,j}, each f_{n,j} is the unique such polynomial
// whose coefficients at the positions u_{n,j} are prescribed:
//   j = 0:  0 on the gaps below s_n, 1 at s_n;
//   j >= 1: 0 on the first m_{n,j}+1 nonzero elements of S, and on each gap
//           t <= s_n + j the value sum_{a=1}^{j} c_{t-a, j-a} h_{t-a, a}.
// The gap values make every y-slice of f_n a combination of the h_i, so
// f_n ∈ R[[y]].

#include <optional>
#include <vector>

#include "nashblow/algebra.hpp"
#include "nashblow/poly.hpp"

namespace nashblow {

struct IndexSets {
  std::vector<long> t_set;  // gaps considered at this degree
  std::vector<long> s_set;  // positions of S prescribed to zero (j >= 1) or {s_n} (j = 0)
  std::vector<long> u_set;  // t_set ∪ s_set, ascending
  long m = 0;               // m_{n,j}
};

IndexSets index_sets(const NumericalSemigroup& s, long n, long j);

/// The unique homogeneous polynomial of the given degree, divisible by
/// (x+y)^{n+1}, whose coefficient at x^{p} y^{degree-p} equals values[k] for
/// p = positions[k]. positions must be ascending with size degree - n.
BivariatePoly prescribed_multiple(long n, long degree, const std::vector<long>& positions,
                                  const std::vector<Coefficient>& values, Field field);

/// f_{n,0}: degree s_n, divisible by (x+y)^{n+1}, zero on gaps below s_n,
/// coefficient 1 at x^{s_n}.
BivariatePoly build_f_n0(const NumericalSemigroup& s, long n, Field field = Field::rationals());

/// Safety cap for the f_{n,j} recurrence: 2 * (t_l + 1) + n + 2.
long default_j_max(const NumericalSemigroup& s, long n);

struct ConstructionState {
  long n = 0;
  long s_n = 0;
  long l_n = 0;
  long j_max = 0;
  /// j at which the zero tail was detected: f_{n,j} = 0 for every j beyond.
  long terminated_at = 0;
  std::vector<BivariatePoly> parts;  // f_{n,0}, ..., f_{n,terminated_at}
  BivariatePoly f_n;

  // Postconditions, each checked independently of the recurrence.
  bool base_pattern_ok = false;   // f_{n,0}: zeros on gaps below s_n, 1 at x^{s_n}
  bool divisible = false;         // (x+y)^{n+1} | f_n
  bool in_r_y = false;            // every y-slice of f_n lies in R
  bool x_axis_ok = false;         // f_n(x,0) ∈ R, monic of order s_n

  /// c_{i,j}; zero outside the computed range.
  Coefficient c(long i, long j) const;
  bool all_checks_pass() const { return base_pattern_ok && divisible && in_r_y && x_axis_ok; }
};

/// Runs the recurrence until the zero tail is reached. Throws NonTermination
/// if that does not happen within j_max (default_j_max when absent).
ConstructionState build_f_n(const CurveAlgebra& algebra, long n, std::optional<long> j_max = std::nullopt);

struct DeformationCertificate {
  long n = 0;
  long s_n = 0;
  BivariatePoly f_n;
  TruncatedSeries g_n;
  std::optional<long> ord_g_n;  // nullopt: g_n = 0
  bool regular = false;         // ord g_n == s_n - 1
};

/// g_n = coefficient of y in f_n. Throws Internal if ord g_n < s_n - 1.
DeformationCertificate extract_g_n(const ConstructionState& state);

/// f ∈ R[[y]] ∩ (x+y)^{n+1} k[x,y].
bool symbolic_power_membership(const BivariatePoly& f, long n, const CurveAlgebra& algebra);

/// length R/a_n = #{s ∈ S : s < s_n}; throws Internal unless it equals n+1.
long a_n_length_check(const NumericalSemigroup& s, long n);

}  // namespace nashblow
