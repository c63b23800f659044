#pragma once

#include <vector>

namespace nashblow {

/// A numerical semigroup S ⊆ N_0: contains 0, closed under addition, finite
/// complement. Membership is tabulated through the conductor; everything at
/// or above the conductor is a member.
class NumericalSemigroup {
 public:
  /// All N_0-combinations of gens. Throws Usage for an empty list,
  /// non-positive entries, or gcd(gens) != 1.
  static NumericalSemigroup from_generators(std::vector<long> gens);

  /// Semigroup whose members in [0, bound] are exactly `elements`. Throws
  /// TruncationTooSmall unless the set contains 0, is closed under addition
  /// inside [0, bound] and bound >= 2 * (largest missing value + 1).
  static NumericalSemigroup from_elements(std::vector<long> elements, long bound);

  /// S = {0, m, m+1, m+2, ...}.
  static NumericalSemigroup ordinary(long m);

  bool contains(long i) const noexcept;
  /// s_{-1} = 0 and s_n is the (n+2)-th smallest element. Requires n >= -1.
  long nth_element(long n) const;
  /// Index n with s_n = value, for value in S \ {0}; -1 for value 0.
  long index_of(long value) const;

  const std::vector<long>& gaps() const noexcept { return gaps_; }
  /// Largest gap t_l, or -1 when S = N_0.
  long frobenius_number() const noexcept { return conductor_ - 1; }
  long conductor_number() const noexcept { return conductor_; }
  /// Number of gaps strictly below s_n.
  long l_n(long n) const;
  /// Minimal generating set, ascending.
  const std::vector<long>& generators() const noexcept { return generators_; }
  std::vector<long> elements_up_to(long max) const;
  bool is_full() const noexcept { return conductor_ == 0; }
  long multiplicity() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.member_ == b.member_;
  }

 private:
  NumericalSemigroup(std::vector<bool> member_below_conductor);

  std::vector<bool> member_;        // membership on [0, conductor)
  std::vector<long> small_elements_;  // elements of S below the conductor
  std::vector<long> gaps_;
  std::vector<long> generators_;
  long conductor_ = 0;
};

}  // namespace nashblow
