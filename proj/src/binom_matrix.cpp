#include "nashblow/binom_matrix.hpp"

#include <algorithm>
#include <utility>

namespace nashblow {

IndexSet::IndexSet(std::vector<long> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0) fail(ErrorCode::Usage, "index set entries must be positive");
    if (i > 0 && values_[i] <= values_[i - 1]) {
      fail(ErrorCode::Usage, "index set must be strictly increasing");
    }
  }
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Coefficient::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, Field field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coefficient::one(field);
  return m;
}

std::vector<Coefficient> ExactMatrix::apply(std::span<const Coefficient> v) const {
  if (v.size() != cols_) fail(ErrorCode::Usage, "matrix/vector dimension mismatch");
  std::vector<Coefficient> out(rows_, Coefficient::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

ExactMatrix build_matrix(long n, const IndexSet& a, Field field) {
  if (n < 0) fail(ErrorCode::Usage, "matrix parameter n must be non-negative");
  const std::size_t e = a.size();
  ExactMatrix m(e, e, field);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      m.at(i, j) = Coefficient::from_int(field, binomial(n, a[i] - static_cast<long>(j)));
    }
  }
  return m;
}

ExactRat det_closed_form(long n, const IndexSet& a) {
  if (n < 0) fail(ErrorCode::Usage, "matrix parameter n must be non-negative");
  const long e = static_cast<long>(a.size());
  ExactInt numerator = 1;
  ExactInt denominator = 1;
  for (long i = 0; i < e; ++i) {
    for (long j = i + 1; j < e; ++j) numerator *= a[j] - a[i];
  }
  for (long i = 1; i <= e; ++i) {
    const long ai = a[i - 1];
    // a strictly increasing and positive gives a_i >= i, so the falling
    // factorial has a_i - i + 1 >= 1 factors.
    for (long factor = n + e - i; factor >= n + e - ai; --factor) numerator *= factor;
    ExactInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(ai));
    denominator *= fact;
  }
  ExactRat det(numerator, denominator);
  det.canonicalize();
  return det;
}

Coefficient det_bruteforce(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Usage, "determinant of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Coefficient::one(f);

  ExactMatrix w = m;
  Coefficient sign = Coefficient::one(f);
  Coefficient prev = Coefficient::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Coefficient::zero(f);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = Coefficient::zero(f);
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

bool is_regular_matrix(long n, const IndexSet& a) { return !det_bruteforce(build_matrix(n, a)).is_zero(); }

std::vector<Coefficient> solve_linear(const ExactMatrix& m, std::span<const Coefficient> rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows()) {
    fail(ErrorCode::Usage, "solve_linear needs a square system");
  }
  const Field f = m.field();
  const std::size_t n = m.rows();
  ExactMatrix w = m;
  std::vector<Coefficient> b(rhs.begin(), rhs.end());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorCode::SingularMatrix, "singular matrix in solve_linear");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      std::swap(b[k], b[pivot]);
    }
    const Coefficient inv = w.at(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w.at(i, k).is_zero()) continue;
      const Coefficient factor = w.at(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) w.at(i, c) -= factor * w.at(k, c);
      b[i] -= factor * b[k];
    }
  }
  std::vector<Coefficient> x(n, Coefficient::zero(f));
  for (std::size_t k = n; k-- > 0;) {
    Coefficient acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= w.at(k, c) * x[c];
    x[k] = acc / w.at(k, k);
  }

  const auto residual = m.apply(x);
  if (!std::equal(residual.begin(), residual.end(), rhs.begin(), rhs.end())) {
    fail(ErrorCode::Internal, "solve_linear: substitution check failed");
  }
  return x;
}

}  // namespace nashblow
