#pragma once

#include <span>
#include <string>
#include <vector>

#include "nashblow/arith.hpp"

namespace nashblow {

/// Strictly increasing positive integers a_1 < ... < a_e.
class IndexSet {
 public:
  /// Throws Usage unless values are positive and strictly increasing.
  explicit IndexSet(std::vector<long> values);

  std::size_t size() const noexcept { return values_.size(); }
  long operator[](std::size_t i) const { return values_[i]; }
  long back() const { return values_.back(); }
  const std::vector<long>& values() const noexcept { return values_; }

 private:
  std::vector<long> values_;
};

/// Dense row-major matrix over one coefficient field.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, Field field);

  static ExactMatrix identity(std::size_t n, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Coefficient& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coefficient& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Coefficient> apply(std::span<const Coefficient> v) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Coefficient> data_;
};

/// M(n; a): entry (i, j) = C(n, a_i - j) for 0-based column j.
ExactMatrix build_matrix(long n, const IndexSet& a, Field field = Field::rationals());

/// det M(n; a) = prod_{i<j}(a_j - a_i) * prod_i [(n+e-i)(n+e-i-1)...(n+e-a_i)] / prod_i a_i!
ExactRat det_closed_form(long n, const IndexSet& a);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Coefficient det_bruteforce(const ExactMatrix& m);

bool is_regular_matrix(long n, const IndexSet& a);

/// Unique solution of m x = rhs; throws SingularMatrix. The result is
/// substituted back and checked before returning.
std::vector<Coefficient> solve_linear(const ExactMatrix& m, std::span<const Coefficient> rhs);

}  // namespace nashblow
