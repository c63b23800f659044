#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nashblow/arith.hpp"

namespace nashblow {

/// Univariate series in x with exact coefficients, known up to degree trunc.
/// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Field field, long trunc = 0);

  static TruncatedSeries monomial(Field field, long degree, Coefficient c, long trunc);

  Field field() const noexcept { return field_; }
  long trunc() const noexcept { return trunc_; }
  const std::map<long, Coefficient>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest degree with a nonzero coefficient; nullopt for the zero series.
  std::optional<long> order() const;
  long max_degree() const;
  Coefficient coeff(long degree) const;

  /// Sets a coefficient; degrees above trunc are discarded.
  void set(long degree, const Coefficient& c);
  void add_to(long degree, const Coefficient& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries scaled(const Coefficient& c) const;
  /// Truncated product; the result is known up to min(trunc).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  /// Equality of coefficients; truncation orders are not compared.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  Field field_;
  long trunc_;
  std::map<long, Coefficient> coeffs_;
};

/// Exponent pair (x-degree, y-degree).
using Exponent = std::pair<long, long>;

/// Sparse polynomial in x and y over a single coefficient field.
class BivariatePoly {
 public:
  explicit BivariatePoly(Field field) : field_(field) {}

  static BivariatePoly constant(Field field, const Coefficient& c);
  static BivariatePoly monomial(Field field, long i, long j, const Coefficient& c);
  static BivariatePoly x(Field field) { return monomial(field, 1, 0, Coefficient::one(field)); }
  static BivariatePoly y(Field field) { return monomial(field, 0, 1, Coefficient::one(field)); }
  /// (x + y)^m with coefficients C(m, i) mapped into the field.
  static BivariatePoly binomial_power(Field field, long m);

  Field field() const noexcept { return field_; }
  const std::map<Exponent, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coeff(long i, long j) const;
  void add_to(long i, long j, const Coefficient& c);

  /// Largest i + j over stored terms; -1 for zero.
  long total_degree() const;
  long max_y_degree() const;
  bool is_homogeneous() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly scaled(const Coefficient& c) const;
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

  /// Coefficient of y^k as a polynomial in x.
  TruncatedSeries y_slice(long k) const;

  std::string to_string() const;

 private:
  Field field_;
  std::map<Exponent, Coefficient> terms_;
};

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b);

/// q with f = q * (x+y)^m, by m successive exact divisions by (x+y);
/// nullopt when f is not divisible.
std::optional<BivariatePoly> divide_by_binomial_power(const BivariatePoly& f, long m);

/// f(x, 0); trunc is the largest x-degree present.
TruncatedSeries substitute_y_zero(const BivariatePoly& f);

/// The coefficient g_1 of y in f = g_0 + g_1 y + g_2 y^2 + ...
TruncatedSeries y_linear_coefficient(const BivariatePoly& f);

}  // namespace nashblow
