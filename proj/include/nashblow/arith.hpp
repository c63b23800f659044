#pragma once

// Exact scalars: GMP integers and rationals, prime-field residues, and the
// tagged Coefficient type shared by every polynomial container.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "nashblow/error.hpp"

namespace nashblow {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Requires n >= 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t p);

/// "num/den" when the denominator is not 1, otherwise "num".
std::string to_string(const ExactRat& q);

/// Coefficient field: Q (characteristic 0) or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws Usage unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Residue modulo a prime; modulus validated by Field::prime.
struct PrimeFieldElem {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;
};

/// An element of Q or F_p. Arithmetic between different fields throws
/// FieldMismatch; there is no implicit coercion.
class Coefficient {
 public:
  Coefficient() : value_(ExactRat(0)) {}
  explicit Coefficient(ExactRat q);
  explicit Coefficient(PrimeFieldElem e) : value_(e) {}

  static Coefficient zero(Field f);
  static Coefficient one(Field f);
  static Coefficient from_int(Field f, const ExactInt& v);
  static Coefficient from_int(Field f, long v) { return from_int(f, ExactInt(v)); }
  /// Maps a rational into f; throws Usage if p divides the denominator.
  static Coefficient from_rat(Field f, const ExactRat& v);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// The rational value; throws FieldMismatch in characteristic p.
  const ExactRat& rational() const;
  const PrimeFieldElem& residue() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  /// Throws Usage on division by zero.
  Coefficient& operator/=(const Coefficient& o);
  Coefficient inverse() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  std::variant<ExactRat, PrimeFieldElem> value_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace nashblow
