#include "nashblow/arith.hpp"

#include <ostream>

namespace nashblow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "USAGE";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::NotInSemigroup: return "NOT_IN_SEMIGROUP";
    case ErrorCode::TruncationTooSmall: return "TRUNCATION_TOO_SMALL";
    case ErrorCode::NonTermination: return "NON_TERMINATION";
    case ErrorCode::DegreeTooSmall: return "DEGREE_TOO_SMALL";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) fail(ErrorCode::Usage, "binomial: n must be non-negative");
  if (k < 0 || k > n) return ExactInt(0);
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string to_string(const ExactRat& value) {
  ExactRat q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    fail(ErrorCode::Usage, "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint64_t reduce_mod(const ExactInt& v, std::uint64_t p) {
  ExactInt r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void require_same(Field a, Field b) {
  if (!(a == b)) {
    fail(ErrorCode::FieldMismatch, "coefficient field mismatch: " + a.name() + " vs " + b.name());
  }
}

}  // namespace

Coefficient::Coefficient(ExactRat q) : value_(std::move(q)) {
  std::get<ExactRat>(value_).canonicalize();
}

Coefficient Coefficient::zero(Field f) { return from_int(f, ExactInt(0)); }
Coefficient Coefficient::one(Field f) { return from_int(f, ExactInt(1)); }

Coefficient Coefficient::from_int(Field f, const ExactInt& v) {
  if (f.is_rational()) return Coefficient(ExactRat(v));
  return Coefficient(PrimeFieldElem{reduce_mod(v, f.characteristic()), f.characteristic()});
}

Coefficient Coefficient::from_rat(Field f, const ExactRat& v) {
  if (f.is_rational()) return Coefficient(v);
  ExactRat q = v;
  q.canonicalize();
  const auto den = from_int(f, q.get_den());
  if (den.is_zero()) {
    fail(ErrorCode::Usage, "denominator " + q.get_den().get_str() + " vanishes in " + f.name());
  }
  return from_int(f, q.get_num()) / den;
}

Field Coefficient::field() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) return Field::prime(e->modulus);
  return Field::rationals();
}

bool Coefficient::is_zero() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) return e->residue == 0;
  return sgn(std::get<ExactRat>(value_)) == 0;
}

bool Coefficient::is_one() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) return e->residue == 1;
  return std::get<ExactRat>(value_) == 1;
}

const ExactRat& Coefficient::rational() const {
  if (const auto* q = std::get_if<ExactRat>(&value_)) return *q;
  fail(ErrorCode::FieldMismatch, "rational value requested from a prime-field coefficient");
}

const PrimeFieldElem& Coefficient::residue() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) return *e;
  fail(ErrorCode::FieldMismatch, "residue requested from a rational coefficient");
}

Coefficient Coefficient::operator-() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) {
    return Coefficient(PrimeFieldElem{(e->modulus - e->residue) % e->modulus, e->modulus});
  }
  return Coefficient(ExactRat(-std::get<ExactRat>(value_)));
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (value_.index() != o.value_.index()) require_same(field(), o.field());
  if (auto* e = std::get_if<PrimeFieldElem>(&value_)) {
    const auto& f = std::get<PrimeFieldElem>(o.value_);
    if (f.modulus != e->modulus) require_same(field(), o.field());
    e->residue = (e->residue + f.residue) % e->modulus;
  } else {
    std::get<ExactRat>(value_) += std::get<ExactRat>(o.value_);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (value_.index() != o.value_.index()) require_same(field(), o.field());
  if (auto* e = std::get_if<PrimeFieldElem>(&value_)) {
    const auto& f = std::get<PrimeFieldElem>(o.value_);
    if (f.modulus != e->modulus) require_same(field(), o.field());
    e->residue = e->residue * f.residue % e->modulus;
  } else {
    std::get<ExactRat>(value_) *= std::get<ExactRat>(o.value_);
  }
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) fail(ErrorCode::Usage, "division by zero coefficient");
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) {
    return Coefficient(PrimeFieldElem{pow_mod(e->residue, e->modulus - 2, e->modulus), e->modulus});
  }
  return Coefficient(ExactRat(1 / std::get<ExactRat>(value_)));
}

Coefficient& Coefficient::operator/=(const Coefficient& o) { return *this *= o.inverse(); }

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.value_.index() != b.value_.index()) return false;
  return a.value_ == b.value_;
}

std::string Coefficient::to_string() const {
  if (const auto* e = std::get_if<PrimeFieldElem>(&value_)) return std::to_string(e->residue);
  return nashblow::to_string(std::get<ExactRat>(value_));
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace nashblow
