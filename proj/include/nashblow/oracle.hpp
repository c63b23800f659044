#pragma once

#include <optional>

#include "nashblow/algebra.hpp"
#include "nashblow/poly.hpp"

namespace nashblow {

/// Outcome of the deformation test on the truncated space
///   V_D = { g : deg g <= D, (x+y)^{n+1} | g, every y-slice of g in R }.
/// Nash_n is regular iff some g ∈ I^{(n+1)} has y-coefficient g_1 ∉ a_n,
/// where a_n = {f ∈ R : ord f >= s_n}.
struct OracleResult {
  long n = 0;
  long s_n = 0;
  long degree_bound = 0;
  bool regular = false;
  /// False for S = N_0: the equivalence is only claimed for singular curves.
  bool hypothesis_holds = true;

  long unknowns = 0;        // coefficients of the cofactor q in g = q (x+y)^{n+1}
  long constraints = 0;     // gap conditions on the y-slices
  long rank = 0;
  long basis_dimension = 0; // dim V_D

  /// Smallest order of g_0 over V_D (nullopt if it exceeds s_n).
  std::optional<long> a_n_order;
  /// An element of V_D whose g_1 has order below s_n, when one exists.
  std::optional<BivariatePoly> witness;
  std::optional<long> witness_g1_order;
};

/// Smallest admissible degree bound: t_l + s_n + 2.
long oracle_min_degree(const NumericalSemigroup& s, long n);
/// Default degree bound: t_l + s_n + n + 4.
long oracle_default_degree(const NumericalSemigroup& s, long n);

/// One run at a fixed degree bound. Throws Usage if degree < oracle_min_degree.
OracleResult deformation_oracle(const CurveAlgebra& algebra, long n, long degree);

struct CalibratedOracle {
  OracleResult primary;   // at D
  OracleResult enlarged;  // at D + 4
  bool regular() const { return primary.regular; }
};

/// Runs at D and D + 4 (D defaults to oracle_default_degree) and throws
/// DegreeTooSmall if the verdicts differ.
CalibratedOracle deformation_oracle_calibrated(const CurveAlgebra& algebra, long n,
                                               std::optional<long> degree = std::nullopt);

}  // namespace nashblow
