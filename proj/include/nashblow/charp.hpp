#pragma once

// Finite checks behind the positive-characteristic statements: over F_p the
// Frobenius power (x+y)^{p^e} collapses to x^{p^e} + y^{p^e}, and for the cusp
// in characteristics 2 and 3 explicit ideals of R ⊗ R have colength n+1.

#include <string>
#include <vector>

#include "nashblow/poly.hpp"
#include "nashblow/semigroup.hpp"

namespace nashblow {

/// True iff C(p^e, i) ≡ 0 mod p for every 0 < i < p^e. Throws Usage unless p
/// is prime and e >= 1.
bool lucas_vanishing(long p, long e);

/// p^e; throws Usage on overflow past 2^40.
long prime_power(long p, long e);

/// (x+y)^m expanded over F_p by repeated squaring in the field.
BivariatePoly binomial_power_mod_p(long p, long m);

/// Every surviving term x^i y^{p^e-i} of (x+y)^{p^e} over F_p has i, p^e-i ∈ S.
bool frobenius_power_membership(const NumericalSemigroup& s, long p, long e);

/// #(S \ (m+S)); equals m. Throws NotInSemigroup if m ∉ S, Usage if m < 1.
long principal_quotient_length(const NumericalSemigroup& s, long m);

/// #(S \ ∪_m (m+S)) over the given orders. Throws NotInSemigroup if an order
/// lies outside S.
long monomial_quotient_length(const NumericalSemigroup& s, const std::vector<long>& orders);

struct CharPWitness {
  long p = 0;
  long n = 0;
  std::string case_description;
  std::vector<BivariatePoly> generators;  // over F_p
  bool membership_verified = false;       // all exponent pairs in S x S
  long quotient_length = 0;               // colength of the y = 0 images
  long expected_length = 0;               // n + 1

  bool passed() const { return membership_verified && quotient_length == expected_length; }
};

/// Case ideal for the cusp <2,3> in characteristic p ∈ {2,3}.
CharPWitness cusp_witness(long p, long n);

}  // namespace nashblow
