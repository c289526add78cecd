// Numerical semigroups stored by their Apery set with respect to a fixed
// member (the "multiplicity base").
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace maxff {

class SemigroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Cofinite submonoid of the non-negative integers.
///
/// The representation is the Apery array `apery[r]`, the least element
/// congruent to r modulo `multiplicity_base()`. Membership is then a single
/// comparison and the genus is `sum(apery[r] / base)`.  Values are immutable.
class NumericalSemigroup {
public:
  /// Builds the semigroup generated by `gens`. `modulus` must lie in the
  /// semigroup; it becomes the Apery base. Throws SemigroupError on an empty
  /// generator list, non-positive entries, gcd != 1, or a modulus that is not
  /// a member.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens,
                                            std::int64_t modulus);

  /// Semigroup whose gap set is exactly `gaps` (must be closed under the
  /// semigroup axioms; checked).
  static NumericalSemigroup from_gaps(std::span<const std::int64_t> gaps, std::int64_t modulus);

  std::int64_t multiplicity_base() const { return base_; }
  std::span<const std::int64_t> apery() const { return apery_; }
  /// Sorted, deduplicated generators this value was built from.
  const std::vector<std::int64_t>& generators() const { return gens_; }

  bool contains(std::int64_t n) const {
    if (n < 0) return false;
    return n >= apery_[static_cast<std::size_t>(n % base_)];
  }

  std::vector<std::int64_t> gaps() const;
  std::int64_t genus() const;
  /// Largest gap, -1 for the full monoid.
  std::int64_t frobenius() const;

  /// Least member in each residue class modulo `base`; `base` must be a
  /// positive member.
  std::vector<std::int64_t> apery_wrt(std::int64_t base) const;

  /// The unique minimal generating system, sorted.
  std::vector<std::int64_t> minimal_generators() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b);

private:
  NumericalSemigroup(std::int64_t base, std::vector<std::int64_t> apery,
                     std::vector<std::int64_t> gens)
      : base_(base), apery_(std::move(apery)), gens_(std::move(gens)) {}

  std::int64_t base_;
  std::vector<std::int64_t> apery_;
  std::vector<std::int64_t> gens_;
};

}  // namespace maxff
