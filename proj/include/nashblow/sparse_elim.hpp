#pragma once

#include <map>

#include "nashblow/arith.hpp"

namespace nashblow {

/// Sparse vector: column index -> nonzero coefficient.
using SparseRow = std::map<long, Coefficient>;

/// Incremental row-echelon form over a field. Each stored row is monic at
/// its smallest column (the pivot). Rows are reduced on insertion only, which
/// keeps fill-in inside the blocks the caller's column order creates.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field field) : field_(field) {}

  /// Residual of row modulo the row space; supported on non-pivot columns.
  SparseRow reduce(SparseRow row) const;
  /// Inserts row if it is independent of the stored rows.
  bool add(SparseRow row);

  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(long col) const { return rows_.contains(col); }

  /// Kernel vector with v[free_col] = 1, v = 0 on the other free columns.
  SparseRow kernel_vector(long free_col) const;

 private:
  Field field_;
  std::map<long, SparseRow> rows_;
};

}  // namespace nashblow
