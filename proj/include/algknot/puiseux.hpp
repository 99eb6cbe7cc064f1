#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algknot/numbers.hpp"

namespace algknot {

/// One cabling stage (p, r); stage 1 is the torus knot T_{p,r}.
struct IteratedTorusDescription {
  std::vector<std::pair<Int, Int>> stages;
};

/// A validated Puiseux characteristic sequence (q0; q1, ..., qn) together
/// with its gcd chain D_i = gcd(q0, ..., qi). Construction enforces
///   2 <= q0 < q1 < ... < qn,  D_i does not divide q_{i+1},  D_n = 1.
class PuiseuxSequence {
 public:
  static PuiseuxSequence parse(const std::string& text);
  static PuiseuxSequence from_terms(std::vector<Int> terms);

  const std::vector<Int>& terms() const { return q_; }
  const std::vector<Int>& gcd_chain() const { return d_; }
  const Int& multiplicity() const { return q_.front(); }
  /// n, the number of essential pairs (terms after q0).
  std::size_t stage_count() const { return q_.size() - 1; }

  /// The semigroup generators s_0, ..., s_n; strictly increasing, s1 = q1.
  std::vector<Int> semigroup_generators() const;
  Int milnor_number() const;
  Int genus() const;
  Int slice_genus() const { return genus(); }
  Int unknotting_number() const { return genus(); }
  IteratedTorusDescription cable_stages() const;

  /// "q0;q1,...,qn", the same format parse() accepts.
  std::string to_text() const;

  bool operator==(const PuiseuxSequence& o) const { return q_ == o.q_; }

 private:
  explicit PuiseuxSequence(std::vector<Int> q, std::vector<Int> d)
      : q_(std::move(q)), d_(std::move(d)) {}

  std::vector<Int> q_;
  std::vector<Int> d_;
};

/// A knot given either as a torus knot T_{a,b} or by a Puiseux sequence.
/// Torus input is canonicalized to the sequence (a; b) with a < b.
class KnotSpec {
 public:
  static KnotSpec torus(Int a, Int b);
  static KnotSpec algebraic(PuiseuxSequence seq);

  const PuiseuxSequence& sequence() const { return seq_; }
  bool is_torus() const { return seq_.stage_count() == 1; }
  Int genus() const { return seq_.genus(); }
  const Int& multiplicity() const { return seq_.multiplicity(); }
  /// "T(a,b)" for torus knots, otherwise "(q0;q1,...)".
  std::string display() const;

  bool operator==(const KnotSpec& o) const { return seq_ == o.seq_; }

 private:
  explicit KnotSpec(PuiseuxSequence seq) : seq_(std::move(seq)) {}
  PuiseuxSequence seq_;
};

}  // namespace algknot
