#include "algknot/upsilon.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

#include "algknot/errors.hpp"
#include "algknot/semigroup.hpp"

namespace algknot {

namespace mp = boost::multiprecision;

std::string verdict_name(Verdict v) {
  return v == Verdict::Obstructed ? "Obstructed" : "NotObstructed";
}

PiecewiseLinear upsilon_of(const KnotSpec& knot) {
  const Int g = knot.genus();
  const Int g2 = 2 * g;
  const auto s = NumericalSemigroup::generate(knot.sequence().semigroup_generators(), g2 + 1);

  std::vector<AffineLine> lines;
  lines.reserve((g2 + 1).convert_to<std::size_t>());
  for (Int m = 0; m <= g2; ++m)
    lines.push_back({m - g, -2 * s.count_below(m)});

  PiecewiseLinear env = PiecewiseLinear::upper_envelope(std::move(lines), Rat(0), Rat(1));
  internal_check(env.breakpoints().front().v == 0, "Upsilon(0) must be 0");
  internal_check(env.is_convex(), "Upsilon must be convex on [0,1]");
  internal_check(env.segment_slope(0) == -Rat(g), "initial slope of Upsilon must be -g");
  return env;
}

Int tau_of(const KnotSpec& knot) {
  const Rat slope = upsilon_of(knot).segment_slope(0);
  internal_check(mp::denominator(slope) == 1, "tau must be an integer");
  return -mp::numerator(slope);
}

Rat first_singularity(const KnotSpec& knot) {
  const PiecewiseLinear ups = upsilon_of(knot);
  // Breakpoints strictly inside (0,1) are genuine slope changes; when the
  // function is affine on all of [0,1] the singularity sits at t = 1.
  Rat t_star(1);
  if (ups.breakpoints().size() > 2) t_star = ups.breakpoints()[1].t;

  const Int g = knot.genus();
  internal_check(t_star == Rat(2, knot.multiplicity()),
                 "first singularity of " + knot.display() + " is not 2/q0");
  internal_check(ups.evaluate(t_star) == -Rat(g) * t_star,
                 "Upsilon at the first singularity must equal -g*t");
  return t_star;
}

PiecewiseLinear upsilon_diff(const KnotSpec& k1, const KnotSpec& k0) {
  return subtract(upsilon_of(k1), upsilon_of(k0));
}

CobordismBound cobordism_genus_lower_bound(const KnotSpec& k0, const KnotSpec& k1) {
  const PiecewiseLinear diff = upsilon_diff(k1, k0);

  // |diff(t)|/t is monotone on each segment, so its supremum over (0,1] is
  // attained at a breakpoint, at t = 1, or in the t -> 0 limit, which equals
  // the absolute difference of the initial slopes, i.e. |g1 - g0|.
  Rat best = abs(k1.genus() - k0.genus());
  Rat witness(0);
  for (const auto& p : diff.breakpoints()) {
    if (p.t == 0) continue;
    const Rat ratio = abs(p.v) / p.t;
    if (ratio > best) {
      best = ratio;
      witness = p.t;
    }
  }
  return {ceil_rat(best), witness};
}

ObstructionReport obstruct_minimal(const KnotSpec& k0, const KnotSpec& k1) {
  const Int g0 = k0.genus();
  const Int g1 = k1.genus();
  if (g0 > g1)
    throw InvalidInput(Errc::GenusOrderViolated,
                       "genus(" + k0.display() + ") = " + g0.str() + " exceeds genus(" +
                           k1.display() + ") = " + g1.str());

  const auto bound = cobordism_genus_lower_bound(k0, k1);
  ObstructionReport report{k0,
                           k1,
                           g0,
                           g1,
                           g1 - g0,
                           bound.bound,
                           bound.witness_t,
                           std::nullopt,
                           bound.bound > g1 - g0 ? Verdict::Obstructed
                                                 : Verdict::NotObstructed};
  internal_check(report.upsilon_bound >= report.tau_bound,
                 "Upsilon bound below the tau bound");
  if (k0.multiplicity() > k1.multiplicity())
    internal_check(report.verdict == Verdict::Obstructed,
                   "multiplicity(k0) > multiplicity(k1) must obstruct a minimal cobordism");
  return report;
}

nlohmann::json ObstructionReport::to_json() const {
  nlohmann::json j{{"k0", k0.display()},
                   {"k1", k1.display()},
                   {"g0", g0.str()},
                   {"g1", g1.str()},
                   {"tau_bound", tau_bound.str()},
                   {"upsilon_bound", upsilon_bound.str()},
                   {"witness_t", to_fraction_string(witness_t)},
                   {"verdict", verdict_name(verdict)}};
  if (signature_bound) j["signature_bound"] = signature_bound->str();
  return j;
}

FamilyCheckResult family_check(const Int& a, const Int& b, const Int& c) {
  FamilyCheckResult result{std::nullopt, "", 0};
  if (a <= 0 || b <= 0 || c <= 0) {
    result.failed_condition = "a,b,c must be positive";
    return result;
  }
  if (!(2 * a < b)) {
    result.failed_condition = "2a<b";
    return result;
  }
  const Int d = mp::gcd(a, b);
  result.d = d;
  if (d <= 1 || mp::gcd(2 * a, b) != d || mp::gcd(a, 3 * b) != d) {
    result.failed_condition = "gcd(a,b)=gcd(2a,b)=gcd(a,3b)=d>1";
    return result;
  }
  if (mp::gcd(d, c) != 1) {
    result.failed_condition = "gcd(a,b,c)=1";
    return result;
  }
  if (!(3 * b < c)) {
    result.failed_condition = "b<c/3";
    return result;
  }
  // The four conditions almost pin down validity, but e.g. a | b with b/a odd
  // slips through and makes a divide 3b; treat that as one more failed
  // condition rather than an error.
  try {
    auto k0 = PuiseuxSequence::from_terms({2 * a, b, c});
    auto k1 = PuiseuxSequence::from_terms({a, 3 * b, c});
    internal_check(k0.genus() <= k1.genus(), "family pair must have g(K0) <= g(K1)");
    result.knots = std::make_pair(std::move(k0), std::move(k1));
  } catch (const InvalidInput&) {
    result.failed_condition = "valid characteristic sequences";
  }
  return result;
}

}  // namespace algknot
