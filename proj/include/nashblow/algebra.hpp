#pragma once

#include <map>
#include <vector>

#include "nashblow/poly.hpp"
#include "nashblow/semigroup.hpp"

namespace nashblow {

/// Normalized standard basis {h_i : i ∈ S} of R ⊆ k[[x]]:
///   h_0 = 1, h_i has leading term x^i for i ∈ S, h_i = 0 for gaps, and the
///   tail of h_i avoids S. Tails therefore sit on gaps, so h_i = x^i for every
///   i above the Frobenius number and each h_i is a polynomial.
class EchelonBasis {
 public:
  EchelonBasis(NumericalSemigroup semigroup, Field field, std::map<long, TruncatedSeries> low);

  /// Monomial ring: h_i = x^i.
  static EchelonBasis monomial(const NumericalSemigroup& semigroup, Field field);

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  Field field() const noexcept { return field_; }

  /// h_i as an exact polynomial; zero for gaps.
  TruncatedSeries h(long i) const;
  /// h_{i,j}: coefficient of x^{i+j} in h_i.
  Coefficient tail(long i, long j) const;
  /// Stored h_i for i ∈ S up to the Frobenius number.
  const std::map<long, TruncatedSeries>& low_elements() const noexcept { return low_; }

 private:
  NumericalSemigroup semigroup_;
  Field field_;
  std::map<long, TruncatedSeries> low_;
};

/// A complete curve algebra R ⊆ k[[x]], either the semigroup ring of S or the
/// closure of explicit generators.
class CurveAlgebra {
 public:
  enum class Mode { Monomial, General };

  static CurveAlgebra monomial(const NumericalSemigroup& semigroup, Field field = Field::rationals());
  /// Computes the value semigroup and echelon basis of k[[gens]] modulo
  /// x^{truncation+1}. Throws TruncationTooSmall when validation fails.
  static CurveAlgebra general(const std::vector<TruncatedSeries>& gens, long truncation);

  Mode mode() const noexcept { return mode_; }
  Field field() const noexcept { return basis_.field(); }
  const NumericalSemigroup& semigroup() const noexcept { return basis_.semigroup(); }
  const EchelonBasis& basis() const noexcept { return basis_; }
  const std::vector<TruncatedSeries>& generators() const noexcept { return generators_; }
  long truncation() const noexcept { return truncation_; }

  /// Gap-supported remainder of a polynomial after reduction by the basis;
  /// zero iff the polynomial lies in R.
  TruncatedSeries reduce(const TruncatedSeries& p) const;
  bool contains(const TruncatedSeries& p) const { return reduce(p).is_zero(); }

 private:
  CurveAlgebra(Mode mode, EchelonBasis basis, std::vector<TruncatedSeries> gens, long truncation)
      : mode_(mode), basis_(std::move(basis)), generators_(std::move(gens)), truncation_(truncation) {}

  Mode mode_;
  EchelonBasis basis_;
  std::vector<TruncatedSeries> generators_;
  long truncation_;
};

/// Value semigroup and normalized basis of the algebra generated by gens,
/// computed modulo x^{truncation+1}.
struct ValueSemigroupResult {
  NumericalSemigroup semigroup;
  EchelonBasis basis;
};
ValueSemigroupResult compute_value_semigroup(const std::vector<TruncatedSeries>& gens, long truncation);

}  // namespace nashblow
