#include "nashblow/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "nashblow/error.hpp"

namespace nashblow {

NumericalSemigroup::NumericalSemigroup(std::vector<bool> member_below_conductor)
    : member_(std::move(member_below_conductor)), conductor_(static_cast<long>(member_.size())) {
  for (long i = 0; i < conductor_; ++i) {
    (member_[i] ? small_elements_ : gaps_).push_back(i);
  }
  const long m = multiplicity();
  for (long s = m; s < conductor_ + m; ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (long a = m; a <= s / 2 && !decomposable; ++a) {
      decomposable = contains(a) && contains(s - a);
    }
    if (!decomposable) generators_.push_back(s);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> gens) {
  if (gens.empty()) fail(ErrorCode::Usage, "generator list is empty");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) fail(ErrorCode::Usage, "generators must be positive");
  long g = 0;
  for (long v : gens) g = std::gcd(g, v);
  if (g != 1) {
    fail(ErrorCode::Usage, "generators have gcd " + std::to_string(g) +
                               " != 1; the complement of the semigroup is infinite");
  }

  // Coin-problem table: once min(gens) consecutive members appear, every
  // larger integer is a member.
  const long run_needed = gens.front();
  std::vector<bool> member{true};
  long run = 1;
  while (run < run_needed) {
    const long i = static_cast<long>(member.size());
    bool in = false;
    for (long v : gens) {
      if (v <= i && member[i - v]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  member.resize(member.size() - run_needed);
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_elements(std::vector<long> elements, long bound) {
  if (bound < 0) fail(ErrorCode::Usage, "bound must be non-negative");
  std::vector<bool> member(bound + 1, false);
  for (long e : elements) {
    if (e < 0 || e > bound) fail(ErrorCode::Usage, "element " + std::to_string(e) + " outside [0, bound]");
    member[e] = true;
  }
  if (!member[0]) fail(ErrorCode::TruncationTooSmall, "value set does not contain 0");
  long frobenius = -1;
  for (long i = bound; i >= 0; --i) {
    if (!member[i]) {
      frobenius = i;
      break;
    }
  }
  if (bound < 2 * (frobenius + 1)) {
    fail(ErrorCode::TruncationTooSmall,
         "truncation " + std::to_string(bound) + " is below twice the candidate conductor " +
             std::to_string(frobenius + 1));
  }
  for (long a = 1; a <= bound; ++a) {
    if (!member[a]) continue;
    for (long b = a; a + b <= bound; ++b) {
      if (member[b] && !member[a + b]) {
        fail(ErrorCode::TruncationTooSmall, "value set is not closed: " + std::to_string(a) + " + " +
                                                std::to_string(b) + " missing");
      }
    }
  }
  member.resize(frobenius + 1);
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::ordinary(long m) {
  if (m < 1) fail(ErrorCode::Usage, "multiplicity must be positive");
  std::vector<bool> member(m, false);
  member[0] = true;
  if (m == 1) member.clear();
  return NumericalSemigroup(std::move(member));
}

bool NumericalSemigroup::contains(long i) const noexcept {
  if (i < 0) return false;
  if (i >= conductor_) return true;
  return member_[i];
}

long NumericalSemigroup::nth_element(long n) const {
  if (n < -1) fail(ErrorCode::Usage, "element index must be >= -1");
  const auto idx = static_cast<std::size_t>(n + 1);
  if (idx < small_elements_.size()) return small_elements_[idx];
  return conductor_ + static_cast<long>(idx - small_elements_.size());
}

long NumericalSemigroup::index_of(long value) const {
  if (!contains(value)) fail(ErrorCode::NotInSemigroup, std::to_string(value) + " is not in S");
  if (value >= conductor_) {
    return static_cast<long>(small_elements_.size()) + (value - conductor_) - 1;
  }
  auto it = std::lower_bound(small_elements_.begin(), small_elements_.end(), value);
  return static_cast<long>(it - small_elements_.begin()) - 1;
}

long NumericalSemigroup::l_n(long n) const {
  if (n < 0) fail(ErrorCode::Usage, "l_n requires n >= 0");
  const long s = nth_element(n);
  return static_cast<long>(std::lower_bound(gaps_.begin(), gaps_.end(), s) - gaps_.begin());
}

std::vector<long> NumericalSemigroup::elements_up_to(long max) const {
  std::vector<long> out;
  for (long i = 0; i <= max; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

long NumericalSemigroup::multiplicity() const { return nth_element(0); }

}  // namespace nashblow
