#pragma once

#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "algknot/numbers.hpp"
#include "algknot/puiseux.hpp"

namespace algknot {

struct SignatureJump {
  Rat x;      // in (0, 1)
  int delta;  // ±2 for torus knots
  bool operator==(const SignatureJump& o) const { return x == o.x && delta == o.delta; }
};

/// An integer step function on (0,1) given by its jumps. The value at a
/// jump point is the average of the one-sided limits; sigma -> 0 at 0+.
class SignatureFunction {
 public:
  explicit SignatureFunction(std::vector<SignatureJump> jumps);

  const std::vector<SignatureJump>& jumps() const { return jumps_; }

  /// sigma(x); exact, using the averaging convention at jump points.
  /// Always an integer since all deltas are even.
  Int value_at(const Rat& x) const;

  bool is_jump(const Rat& x) const;

  nlohmann::json to_json() const;

 private:
  std::vector<SignatureJump> jumps_;
};

/// Tristram-Levine signature function of T_{p,q} by the counting rule:
/// for each s = i/p + j/q (1 <= i < p, 1 <= j < q), a jump of +2 at s when
/// s < 1 and of -2 at s - 1 when s > 1. Normalizes p < q; NotCoprime on
/// gcd(p,q) != 1 or min < 2.
SignatureFunction torus_signature(const Int& p, const Int& q);

/// Seifert matrix of T_{p,q} from the band presentation of the closed
/// positive braid (s_1 ... s_{p-1})^q; size (p-1)(q-1).
Eigen::MatrixXi torus_seifert_matrix(int p, int q);

/// Signature of (1-w)V + (1-conj(w))V^T at w = e^{2 pi i x}, eigenvalues in
/// floating point. Rejects x at a jump; throws EigenvalueTooCloseToZero if
/// any eigenvalue magnitude falls below tolerance * ||M||.
int signature_oracle(int p, int q, const Rat& x, double tolerance = 1e-9);

/// max over non-jump x in (0,1) of |sigma_{k1}(x) - sigma_{k0}(x)|, by an
/// exact scan of midpoints between merged jump locations.
Int signature_diff_max(const KnotSpec& k0, const KnotSpec& k1);

/// ceil(signature_diff_max / 2): the signature lower bound for the genus of
/// a cobordism between the two torus knots.
Int signature_cobordism_bound(const KnotSpec& k0, const KnotSpec& k1);

}  // namespace algknot
