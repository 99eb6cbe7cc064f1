#include <doctest.h>

#include "algknot/errors.hpp"
#include "algknot/piecewise_linear.hpp"
#include "corpus.hpp"

using namespace algknot;

namespace {

PiecewiseLinear envelope(std::vector<AffineLine> lines) {
  return PiecewiseLinear::upper_envelope(std::move(lines), Rat(0), Rat(1));
}

}  // namespace

TEST_CASE("upper envelope of two crossing lines") {
  // max(-3t, -2) on [0,1]: kink at t = 2/3
  const auto f = envelope({{-3, 0}, {0, -2}});
  REQUIRE(f.breakpoints().size() == 3);
  CHECK(f.breakpoints()[0] == Breakpoint{Rat(0), Rat(0)});
  CHECK(f.breakpoints()[1] == Breakpoint{Rat(2, 3), Rat(-2)});
  CHECK(f.breakpoints()[2] == Breakpoint{Rat(1), Rat(-2)});
}

TEST_CASE("envelope drops dominated lines and duplicate slopes") {
  const auto f = envelope({{-3, 0}, {-3, -5}, {0, -2}, {0, -7}, {-1, -4}});
  REQUIRE(f.breakpoints().size() == 3);
  CHECK(f.evaluate(Rat(1, 3)) == Rat(-1));
  CHECK(f.evaluate(Rat(5, 6)) == Rat(-2));
}

TEST_CASE("single line envelope") {
  const auto f = envelope({{2, 1}});
  CHECK(f.breakpoints().size() == 2);
  CHECK(f.evaluate(Rat(1, 2)) == Rat(2));
}

TEST_CASE("evaluate interpolates exactly and enforces the domain") {
  const auto f = PiecewiseLinear::from_breakpoints(
      {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(-3)}, {Rat(1), Rat(-4)}});
  CHECK(f.evaluate(Rat(1, 4)) == Rat(-3, 2));
  CHECK(f.evaluate(Rat(3, 4)) == Rat(-7, 2));
  CHECK(f.evaluate(Rat(1)) == Rat(-4));
  CHECK_THROWS_AS(f.evaluate(Rat(-1, 10)), InvalidInput);
  CHECK_THROWS_AS(f.evaluate(Rat(2)), InvalidInput);
}

TEST_CASE("from_breakpoints collapses collinear points and rejects bad input") {
  const auto f = PiecewiseLinear::from_breakpoints(
      {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}});
  CHECK(f.breakpoints().size() == 2);
  CHECK_THROWS_AS(PiecewiseLinear::from_breakpoints({{Rat(0), Rat(0)}}), InvalidInput);
  CHECK_THROWS_AS(
      PiecewiseLinear::from_breakpoints({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}),
      InvalidInput);
}

TEST_CASE("subtract merges breakpoints") {
  const auto a = envelope({{-3, 0}, {0, -2}});   // kink at 2/3
  const auto b = envelope({{-6, 0}, {-2, -2}});  // kink at 1/2
  const auto d = subtract(a, b);
  CHECK(d.evaluate(Rat(0)) == 0);
  CHECK(d.evaluate(Rat(1, 2)) == Rat(-3, 2) - Rat(-3));
  CHECK(d.evaluate(Rat(1)) == Rat(-2) - Rat(-4));
  // self-difference collapses to the zero function
  const auto z = subtract(a, a);
  CHECK(z.breakpoints().size() == 2);
  CHECK(z.evaluate(Rat(1, 3)) == 0);
}

TEST_CASE("symmetric extension") {
  const auto f = envelope({{-3, 0}, {0, -2}});
  const auto ext = f.extend_symmetric();
  CHECK(ext.domain_max() == 2);
  testing::Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const Rat t = rng.rational(200);
    CHECK(ext.evaluate(t) == ext.evaluate(Rat(2) - t));
  }
  // flat part [2/3, 4/3] survives and the redundant vertex at t=1 is gone
  for (const auto& p : ext.breakpoints()) CHECK(p.t != 1);
  CHECK(ext.evaluate(Rat(1)) == -2);
  CHECK(ext.evaluate(Rat(4, 3)) == -2);
}
