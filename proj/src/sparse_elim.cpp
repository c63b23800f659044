#include "nashblow/sparse_elim.hpp"

namespace nashblow {

SparseRow SparseEchelon::reduce(SparseRow row) const {
  for (auto it = row.begin(); it != row.end();) {
    const long col = it->first;
    auto pivot = rows_.find(col);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const Coefficient factor = it->second;
    for (const auto& [c, v] : pivot->second) {
      auto [slot, inserted] = row.try_emplace(c, -(factor * v));
      if (!inserted) {
        slot->second -= factor * v;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
    it = row.upper_bound(col);
  }
  return row;
}

bool SparseEchelon::add(SparseRow row) {
  if (!row.empty() && !(row.begin()->second.field() == field_)) {
    fail(ErrorCode::FieldMismatch, "row over a different field");
  }
  SparseRow r = reduce(std::move(row));
  if (r.empty()) return false;
  const Coefficient inv = r.begin()->second.inverse();
  for (auto& [c, v] : r) v *= inv;
  const long pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

SparseRow SparseEchelon::kernel_vector(long free_col) const {
  if (rows_.contains(free_col)) fail(ErrorCode::Usage, "kernel_vector needs a free column");
  SparseRow v;
  v.emplace(free_col, Coefficient::one(field_));
  // Pivots above free_col stay zero; solve the rest from the top down.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    const long p = it->first;
    if (p > free_col) continue;
    Coefficient acc = Coefficient::zero(field_);
    for (auto term = it->second.upper_bound(p); term != it->second.end(); ++term) {
      auto value = v.find(term->first);
      if (value != v.end()) acc += term->second * value->second;
    }
    if (!acc.is_zero()) v.emplace(p, -acc);
  }
  return v;
}

}  // namespace nashblow
