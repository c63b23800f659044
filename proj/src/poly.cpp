#include "nashblow/poly.hpp"

#include <algorithm>
#include <vector>

namespace nashblow {

namespace {

void require_field(Field a, Field b) {
  if (!(a == b)) {
    fail(ErrorCode::FieldMismatch, "polynomial field mismatch: " + a.name() + " vs " + b.name());
  }
}

template <typename Key>
void accumulate(std::map<Key, Coefficient>& m, const Key& k, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string monomial_string(const Coefficient& c, long i, long j) {
  std::string var;
  if (i > 0) var += i == 1 ? std::string("x") : "x^" + std::to_string(i);
  if (j > 0) {
    if (!var.empty()) var += "*";
    var += j == 1 ? std::string("y") : "y^" + std::to_string(j);
  }
  if (var.empty()) return c.to_string();
  if (c.is_one()) return var;
  if ((-c).is_one()) return "-" + var;
  return c.to_string() + "*" + var;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (!parts[k].empty() && parts[k][0] == '-') {
      out += " - " + parts[k].substr(1);
    } else {
      out += " + " + parts[k];
    }
  }
  return out;
}

}  // namespace

// ---- TruncatedSeries ----

TruncatedSeries::TruncatedSeries(Field field, long trunc) : field_(field), trunc_(trunc) {
  if (trunc < 0) fail(ErrorCode::Usage, "truncation order must be non-negative");
}

TruncatedSeries TruncatedSeries::monomial(Field field, long degree, Coefficient c, long trunc) {
  TruncatedSeries s(field, trunc);
  s.set(degree, c);
  return s;
}

std::optional<long> TruncatedSeries::order() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

long TruncatedSeries::max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Coefficient TruncatedSeries::coeff(long degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Coefficient::zero(field_) : it->second;
}

void TruncatedSeries::set(long degree, const Coefficient& c) {
  if (degree < 0) fail(ErrorCode::Usage, "negative series degree");
  require_field(field_, c.field());
  if (degree > trunc_) return;
  if (c.is_zero()) {
    coeffs_.erase(degree);
  } else {
    coeffs_.insert_or_assign(degree, c);
  }
}

void TruncatedSeries::add_to(long degree, const Coefficient& c) {
  if (degree < 0) fail(ErrorCode::Usage, "negative series degree");
  require_field(field_, c.field());
  if (degree > trunc_) return;
  accumulate(coeffs_, degree, c);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_field(field_, o.field_);
  trunc_ = std::min(trunc_, o.trunc_);
  while (!coeffs_.empty() && coeffs_.rbegin()->first > trunc_) coeffs_.erase(std::prev(coeffs_.end()));
  for (const auto& [d, c] : o.coeffs_) add_to(d, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  return *this += o.scaled(-Coefficient::one(field_));
}

TruncatedSeries TruncatedSeries::scaled(const Coefficient& c) const {
  require_field(field_, c.field());
  TruncatedSeries r(field_, trunc_);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : coeffs_) r.coeffs_.emplace(d, v * c);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_field(a.field_, b.field_);
  TruncatedSeries r(a.field_, std::min(a.trunc_, b.trunc_));
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) {
      if (da + db > r.trunc_) break;
      accumulate(r.coeffs_, da + db, ca * cb);
    }
  }
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [d, c] : coeffs_) parts.push_back(monomial_string(c, d, 0));
  return join_terms(parts);
}

// ---- BivariatePoly ----

BivariatePoly BivariatePoly::constant(Field field, const Coefficient& c) {
  return monomial(field, 0, 0, c);
}

BivariatePoly BivariatePoly::monomial(Field field, long i, long j, const Coefficient& c) {
  BivariatePoly p(field);
  p.add_to(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::binomial_power(Field field, long m) {
  if (m < 0) fail(ErrorCode::Usage, "negative exponent");
  BivariatePoly p(field);
  for (long i = 0; i <= m; ++i) p.add_to(i, m - i, Coefficient::from_int(field, binomial(m, i)));
  return p;
}

Coefficient BivariatePoly::coeff(long i, long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Coefficient::zero(field_) : it->second;
}

void BivariatePoly::add_to(long i, long j, const Coefficient& c) {
  if (i < 0 || j < 0) fail(ErrorCode::Usage, "negative exponent in polynomial term");
  require_field(field_, c.field());
  accumulate(terms_, Exponent{i, j}, c);
}

long BivariatePoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

long BivariatePoly::max_y_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

bool BivariatePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = terms_.begin()->first.first + terms_.begin()->first.second;
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.first + t.first.second == d; });
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  require_field(field_, o.field_);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  require_field(field_, o.field_);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

BivariatePoly BivariatePoly::scaled(const Coefficient& c) const {
  require_field(field_, c.field());
  BivariatePoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  require_field(a.field_, b.field_);
  BivariatePoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      accumulate(r.terms_, Exponent{ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return r;
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

TruncatedSeries BivariatePoly::y_slice(long k) const {
  long trunc = 0;
  for (const auto& [e, c] : terms_) {
    if (e.second == k) trunc = std::max(trunc, e.first);
  }
  TruncatedSeries s(field_, trunc);
  for (const auto& [e, c] : terms_) {
    if (e.second == k) s.set(e.first, c);
  }
  return s;
}

std::string BivariatePoly::to_string() const {
  // Descending x-degree reads naturally for the homogeneous polynomials
  // this library builds: x^2 - y^2 rather than -y^2 + x^2.
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    parts.push_back(monomial_string(it->second, it->first.first, it->first.second));
  }
  return join_terms(parts);
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b) { return a * b; }

std::optional<BivariatePoly> divide_by_binomial_power(const BivariatePoly& f, long m) {
  if (m < 0) fail(ErrorCode::Usage, "negative exponent");
  BivariatePoly current = f;
  for (long step = 0; step < m; ++step) {
    // Synthetic division by the x-monic factor (x + y): repeatedly clear the
    // term of largest x-degree.
    std::map<Exponent, Coefficient> rest = current.terms();
    BivariatePoly quotient(f.field());
    while (!rest.empty()) {
      auto last = std::prev(rest.end());
      const auto [i, j] = last->first;
      if (i == 0) return std::nullopt;
      const Coefficient c = last->second;
      rest.erase(last);
      quotient.add_to(i - 1, j, c);
      // subtract c x^{i-1} y^{j+1}
      accumulate(rest, Exponent{i - 1, j + 1}, -c);
    }
    current = std::move(quotient);
  }
  return current;
}

TruncatedSeries substitute_y_zero(const BivariatePoly& f) { return f.y_slice(0); }

TruncatedSeries y_linear_coefficient(const BivariatePoly& f) { return f.y_slice(1); }

}  // namespace nashblow
