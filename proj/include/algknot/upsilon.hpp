#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "algknot/numbers.hpp"
#include "algknot/piecewise_linear.hpp"
#include "algknot/puiseux.hpp"

namespace algknot {

enum class Verdict { Obstructed, NotObstructed };

std::string verdict_name(Verdict v);

/// Lower bounds on the genus of any cobordism between two algebraic knots,
/// ordered so that genus(k0) <= genus(k1).
struct ObstructionReport {
  KnotSpec k0;
  KnotSpec k1;
  Int g0;
  Int g1;
  Int tau_bound;      // g1 - g0
  Int upsilon_bound;  // >= tau_bound
  Rat witness_t;      // t attaining the Upsilon maximum; 0 = the t->0 limit
  std::optional<Int> signature_bound;  // filled for torus-knot pairs
  Verdict verdict;    // Obstructed iff upsilon_bound > g1 - g0

  nlohmann::json to_json() const;
};

/// The Upsilon function on [0,1]: the upper envelope of the 2g+1 lines
/// L_m(t) = -2 #(S ∩ [0,m)) + t (m - g), m = 0..2g. Convex, Upsilon(0) = 0.
PiecewiseLinear upsilon_of(const KnotSpec& knot);

/// Negative of the initial slope of Upsilon; equals the genus.
Int tau_of(const KnotSpec& knot);

/// Smallest t > 0 where Upsilon changes slope (t = 1 when affine throughout).
/// Checks that it equals 2/q0 and that Upsilon there equals -g * t.
Rat first_singularity(const KnotSpec& knot);

/// Upsilon of the connected sum k1 # -k0, as the pointwise difference.
PiecewiseLinear upsilon_diff(const KnotSpec& k1, const KnotSpec& k0);

struct CobordismBound {
  Int bound;
  Rat witness_t;
};

/// ceil(sup over t in (0,1] of |Upsilon_{k1 # -k0}(t)| / t), including the
/// t->0 limit |g1 - g0|. witness_t = 0 reports the limit.
CobordismBound cobordism_genus_lower_bound(const KnotSpec& k0, const KnotSpec& k1);

/// Requires genus(k0) <= genus(k1) (GenusOrderViolated otherwise; the pair
/// is never swapped silently). Checks the obstruction theorem: whenever
/// multiplicity(k0) > multiplicity(k1) the verdict must be Obstructed.
ObstructionReport obstruct_minimal(const KnotSpec& k0, const KnotSpec& k1);

/// Outcome of testing (a, b, c) against the family conditions
///   2a < b,  gcd(a,b) = gcd(2a,b) = gcd(a,3b) = d > 1,
///   gcd(a,b,c) = 1,  b < c/3.
/// On success holds the validated pair (2a; b, c), (a; 3b, c) with
/// genus(first) <= genus(second); on failure names the condition that failed.
struct FamilyCheckResult {
  std::optional<std::pair<PuiseuxSequence, PuiseuxSequence>> knots;
  std::string failed_condition;  // empty on success
  Int d;                         // gcd(a, b); 0 if not reached
};

FamilyCheckResult family_check(const Int& a, const Int& b, const Int& c);

}  // namespace algknot
