#include "algknot/signature.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include "algknot/errors.hpp"

namespace algknot {

namespace mp = boost::multiprecision;

SignatureFunction::SignatureFunction(std::vector<SignatureJump> jumps) {
  std::sort(jumps.begin(), jumps.end(),
            [](const SignatureJump& a, const SignatureJump& b) { return a.x < b.x; });
  for (auto& j : jumps) {
    if (j.x <= 0 || j.x >= 1)
      throw InvalidInput(Errc::OutOfDomain, "jump location outside (0,1)");
    if (!jumps_.empty() && jumps_.back().x == j.x) jumps_.back().delta += j.delta;
    else jumps_.push_back(j);
  }
  std::erase_if(jumps_, [](const SignatureJump& j) { return j.delta == 0; });
}

Int SignatureFunction::value_at(const Rat& x) const {
  Int twice = 0;  // 2*sigma(x), so the jump-point average stays integral
  for (const auto& j : jumps_) {
    if (j.x < x) twice += 2 * j.delta;
    else if (j.x == x) twice += j.delta;
    else break;
  }
  internal_check(twice % 2 == 0, "signature value must be an integer");
  return twice / 2;
}

bool SignatureFunction::is_jump(const Rat& x) const {
  return std::any_of(jumps_.begin(), jumps_.end(),
                     [&](const SignatureJump& j) { return j.x == x; });
}

nlohmann::json SignatureFunction::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& j : jumps_)
    arr.push_back({{"x", to_fraction_string(j.x)}, {"delta", j.delta}});
  return arr;
}

namespace {

std::pair<Int, Int> normalize_torus(Int p, Int q) {
  if (p > q) std::swap(p, q);
  if (p < 2)
    throw InvalidInput(Errc::NotCoprime, "torus parameters must be at least 2");
  if (mp::gcd(p, q) != 1)
    throw InvalidInput(Errc::NotCoprime,
                       "gcd(" + p.str() + "," + q.str() + ") is not 1");
  return {p, q};
}

}  // namespace

SignatureFunction torus_signature(const Int& p_in, const Int& q_in) {
  const auto [p, q] = normalize_torus(p_in, q_in);
  std::vector<SignatureJump> jumps;
  for (Int i = 1; i < p; ++i) {
    for (Int j = 1; j < q; ++j) {
      const Rat s = Rat(i, p) + Rat(j, q);  // in (0,2), never exactly 1
      if (s > 1) jumps.push_back({s - 1, -2});
      else jumps.push_back({s, +2});
    }
  }
  return SignatureFunction(std::move(jumps));
}

Eigen::MatrixXi torus_seifert_matrix(int p, int q) {
  internal_check(p >= 2 && q >= 2 && std::gcd(p, q) == 1, "invalid torus parameters");
  if (p > q) std::swap(p, q);

  // Band generators of the Seifert surface of the closed positive braid
  // (s_1 ... s_{p-1})^q: one per consecutive pair of crossings in a column.
  struct Gen { int col, lo, hi; };
  std::vector<Gen> gens;
  {
    std::vector<std::vector<int>> occurrences(p);
    int pos = 0;
    for (int rep = 0; rep < q; ++rep)
      for (int col = 1; col < p; ++col) occurrences[col].push_back(pos++);
    for (int col = 1; col < p; ++col)
      for (std::size_t k = 0; k + 1 < occurrences[col].size(); ++k)
        gens.push_back({col, occurrences[col][k], occurrences[col][k + 1]});
  }

  const int n = static_cast<int>(gens.size());
  internal_check(n == (p - 1) * (q - 1), "unexpected band generator count");
  Eigen::MatrixXi v = Eigen::MatrixXi::Zero(n, n);
  for (int s = 0; s < n; ++s) v(s, s) = -1;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const Gen& a = gens[s];
      const Gen& b = gens[t];
      if (a.col == b.col && a.hi == b.lo) v(s, t) = 1;
      if (b.col == a.col + 1) {
        if (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) v(s, t) = 1;   // interleaved
        if (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi) v(s, t) = -1;  // reversed
      }
    }
  }
  return v;
}

int signature_oracle(int p, int q, const Rat& x, double tolerance) {
  if (x <= 0 || x >= 1)
    throw InvalidInput(Errc::OutOfDomain, "oracle needs x in (0,1)");
  if (torus_signature(p, q).is_jump(x))
    throw InvalidInput(Errc::EigenvalueTooCloseToZero,
                       to_fraction_string(x) + " is a jump location");

  const Eigen::MatrixXi v = torus_seifert_matrix(p, q);
  const Eigen::MatrixXd vd = v.cast<double>();
  const double angle = 2.0 * std::numbers::pi * approx(x);
  const std::complex<double> omega(std::cos(angle), std::sin(angle));
  Eigen::MatrixXcd m = (1.0 - omega) * vd + (1.0 - std::conj(omega)) * vd.transpose();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  internal_check(solver.info() == Eigen::Success, "eigenvalue computation failed");
  const double margin = tolerance * m.norm();
  int signature = 0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (std::abs(lambda) < margin)
      throw InvalidInput(Errc::EigenvalueTooCloseToZero,
                         "eigenvalue within tolerance of zero at x = " +
                             to_fraction_string(x));
    signature += lambda > 0 ? 1 : -1;
  }
  return signature;
}

namespace {

SignatureFunction signature_of(const KnotSpec& k) {
  if (!k.is_torus())
    throw InvalidInput(Errc::MalformedText,
                       "signature functions are provided for torus knots only");
  return torus_signature(k.sequence().terms()[0], k.sequence().terms()[1]);
}

}  // namespace

Int signature_diff_max(const KnotSpec& k0, const KnotSpec& k1) {
  const SignatureFunction s0 = signature_of(k0);
  const SignatureFunction s1 = signature_of(k1);

  // sigma_{k1 # -k0} = sigma_{k1} - sigma_{k0} is constant between merged
  // jump locations; scan every open interval via its exact midpoint.
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const auto& j : s0.jumps()) cuts.push_back(j.x);
  for (const auto& j : s1.jumps()) cuts.push_back(j.x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Int best = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat mid = (cuts[i] + cuts[i + 1]) / 2;
    best = std::max(best, Int(abs(s1.value_at(mid) - s0.value_at(mid))));
  }
  return best;
}

Int signature_cobordism_bound(const KnotSpec& k0, const KnotSpec& k1) {
  return ceil_rat(Rat(signature_diff_max(k0, k1), 2));
}

}  // namespace algknot
