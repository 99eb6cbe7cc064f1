#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "algknot/numbers.hpp"

namespace algknot {

/// A numerical semigroup <g0, ..., gk> with gcd 1, materialized as a dense
/// membership table on [0, table_bound()). The table always covers the
/// conductor. Immutable after generate().
class NumericalSemigroup {
 public:
  /// Sieves membership up to max(bound, conductor). Throws InvalidInput
  /// with NotCoprimeGenerators unless the generators' overall gcd is 1.
  static NumericalSemigroup generate(std::vector<Int> generators, const Int& bound);

  const std::vector<Int>& generators() const { return gens_; }
  Int conductor() const { return Int(conductor_); }
  Int gap_count() const { return Int(gap_count_); }
  Int min_positive() const;
  Int table_bound() const { return Int(table_.size()); }

  /// Total membership test; anything at or past the conductor is a member.
  bool contains(const Int& m) const;

  /// #(S ∩ [0, m)). Throws QueryBeyondTable when m exceeds the table.
  Int count_below(const Int& m) const;

  /// True iff for all 0 <= m < 2g exactly one of m, 2g-1-m is a member.
  bool is_symmetric(const Int& genus) const;

  /// Coefficients (ascending) of (1-t) * sum_{s in S, s < 2g} t^s + t^{2g}.
  /// For a Puiseux-derived semigroup this is the Alexander polynomial.
  std::vector<Int> alexander_polynomial(const Int& genus) const;

  /// The gaps (non-members), all below the conductor.
  std::vector<Int> gaps() const;

 private:
  NumericalSemigroup() = default;

  std::uint64_t count_below_idx(std::uint64_t m) const;

  std::vector<Int> gens_;
  std::vector<bool> table_;
  std::vector<std::uint64_t> prefix_;  // prefix_[m] = #(S ∩ [0, m))
  std::uint64_t conductor_ = 0;
  std::uint64_t gap_count_ = 0;
};

}  // namespace algknot
