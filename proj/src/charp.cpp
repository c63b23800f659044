#include "nashblow/charp.hpp"

#include <algorithm>

namespace nashblow {

namespace {

Field require_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::Usage, std::to_string(p) + " is not prime");
  }
  return Field::prime(static_cast<std::uint64_t>(p));
}

bool support_in_s_squared(const BivariatePoly& f, const NumericalSemigroup& s) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return s.contains(term.first.first) && s.contains(term.first.second); });
}

}  // namespace

long prime_power(long p, long e) {
  if (e < 0) fail(ErrorCode::Usage, "exponent must be non-negative");
  long q = 1;
  for (long k = 0; k < e; ++k) {
    if (q > (1L << 40) / p) fail(ErrorCode::Usage, "p^e is too large");
    q *= p;
  }
  return q;
}

bool lucas_vanishing(long p, long e) {
  require_prime(p);
  if (e < 1) fail(ErrorCode::Usage, "lucas_vanishing requires e >= 1");
  const long q = prime_power(p, e);
  const ExactInt modulus(p);
  for (long i = 1; i < q; ++i) {
    if (binomial(q, i) % modulus != 0) return false;
  }
  return true;
}

BivariatePoly binomial_power_mod_p(long p, long m) {
  const Field f = require_prime(p);
  if (m < 0) fail(ErrorCode::Usage, "negative exponent");
  BivariatePoly result = BivariatePoly::constant(f, Coefficient::one(f));
  BivariatePoly base = BivariatePoly::x(f) + BivariatePoly::y(f);
  for (long k = m; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

bool frobenius_power_membership(const NumericalSemigroup& s, long p, long e) {
  return support_in_s_squared(binomial_power_mod_p(p, prime_power(p, e)), s);
}

long principal_quotient_length(const NumericalSemigroup& s, long m) {
  if (m < 1) fail(ErrorCode::Usage, "principal_quotient_length requires m >= 1");
  const long length = monomial_quotient_length(s, {m});
  if (length != m) fail(ErrorCode::Internal, "length R/x^m R differs from m");
  return length;
}

long monomial_quotient_length(const NumericalSemigroup& s, const std::vector<long>& orders) {
  if (orders.empty()) fail(ErrorCode::Usage, "monomial_quotient_length needs at least one order");
  for (long m : orders) {
    if (!s.contains(m)) fail(ErrorCode::NotInSemigroup, std::to_string(m) + " is not in S");
  }
  // Beyond max(orders) + conductor every element of S is covered.
  const long bound = *std::max_element(orders.begin(), orders.end()) + s.conductor_number();
  long count = 0;
  for (long v : s.elements_up_to(bound)) {
    const bool covered = std::any_of(orders.begin(), orders.end(), [&](long m) { return v >= m && s.contains(v - m); });
    if (!covered) ++count;
  }
  return count;
}

CharPWitness cusp_witness(long p, long n) {
  if (p != 2 && p != 3) fail(ErrorCode::Usage, "cusp witnesses exist only for p = 2 and p = 3");
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  const Field f = Field::prime(static_cast<std::uint64_t>(p));
  const NumericalSemigroup cusp = NumericalSemigroup::from_generators({2, 3});
  const BivariatePoly x = BivariatePoly::x(f);
  const BivariatePoly y = BivariatePoly::y(f);
  const BivariatePoly quadric = x * x + x * y + y * y;
  auto power = [&](long m) { return binomial_power_mod_p(p, m); };

  CharPWitness w;
  w.p = p;
  w.n = n;
  w.expected_length = n + 1;
  const long residue = n % p;
  if (p == 2 && residue == 1) {
    w.case_description = "p = 2, n odd";
    w.generators = {power(n + 1)};
  } else if (p == 2) {
    w.case_description = "p = 2, n even";
    w.generators = {power(n + 2), quadric * power(n + 1)};
  } else if (residue == 2) {
    w.case_description = "p = 3, n = 2 mod 3";
    w.generators = {power(n + 1)};
  } else if (residue == 1) {
    w.case_description = "p = 3, n = 1 mod 3";
    w.generators = {power(n + 2), quadric * power(n + 1)};
  } else {
    w.case_description = "p = 3, n = 0 mod 3";
    w.generators = {(x - y) * power(n + 1), power(n + 3)};
  }

  w.membership_verified = std::all_of(w.generators.begin(), w.generators.end(),
                                      [&](const BivariatePoly& g) { return support_in_s_squared(g, cusp); });
  std::vector<long> orders;
  for (const auto& g : w.generators) {
    const TruncatedSeries image = substitute_y_zero(g);
    // Each image is a single monomial, so its order determines the ideal.
    if (image.coeffs().size() != 1) fail(ErrorCode::Internal, "y = 0 image is not a monomial");
    orders.push_back(*image.order());
  }
  w.quotient_length = w.membership_verified ? monomial_quotient_length(cusp, orders) : 0;
  return w;
}

}  // namespace nashblow
