#pragma once

// Shared test helpers: exhaustive enumeration of valid Puiseux sequences and
// deterministic random rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include "algknot/numbers.hpp"
#include "algknot/puiseux.hpp"

namespace algknot::testing {

/// All valid characteristic sequences with every term <= max_q and at most
/// max_n essential terms, in lexicographic order.
inline std::vector<PuiseuxSequence> enumerate_sequences(int max_q, int max_n) {
  std::vector<PuiseuxSequence> out;
  std::vector<Int> terms;
  auto extend = [&](auto&& self, long long d, int n) -> void {
    if (n >= max_n) return;
    for (long long q = terms.back().convert_to<long long>() + 1; q <= max_q; ++q) {
      const long long nd = boost::multiprecision::gcd(Int(d), Int(q)).convert_to<long long>();
      if (nd == d) continue;  // d divides q: characteristic condition fails
      terms.emplace_back(q);
      if (nd == 1) out.push_back(PuiseuxSequence::from_terms(terms));
      else self(self, nd, n + 1);
      terms.pop_back();
    }
  };
  for (long long q0 = 2; q0 <= max_q; ++q0) {
    terms.assign(1, Int(q0));
    extend(extend, q0, 0);
  }
  return out;
}

/// Torus knots T(a,b), coprime 2 <= a < b <= max_b.
inline std::vector<KnotSpec> enumerate_torus_knots(int max_b) {
  std::vector<KnotSpec> out;
  for (int a = 2; a < max_b; ++a)
    for (int b = a + 1; b <= max_b; ++b)
      if (std::gcd(a, b) == 1) out.push_back(KnotSpec::torus(a, b));
  return out;
}

/// Small deterministic PRNG (xorshift) so frozen test values are stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  /// Uniform-ish rational in (0, 1) with denominator <= max_den.
  Rat rational(std::uint64_t max_den) {
    const std::uint64_t den = 2 + next() % (max_den - 1);
    const std::uint64_t num = 1 + next() % (den - 1);
    return Rat(Int(num), Int(den));
  }

 private:
  std::uint64_t state_;
};

}  // namespace algknot::testing
