#include <doctest.h>

#include <numeric>

#include "algknot/errors.hpp"
#include "algknot/puiseux.hpp"
#include "corpus.hpp"

using namespace algknot;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("parse_sequence accepts the worked examples") {
  const auto k = PuiseuxSequence::parse("4;6,7");
  CHECK(k.terms() == ints({4, 6, 7}));
  CHECK(k.gcd_chain() == ints({4, 2, 1}));

  const auto trefoil = PuiseuxSequence::parse("2;3");
  CHECK(trefoil.terms() == ints({2, 3}));
  CHECK(trefoil.gcd_chain() == ints({2, 1}));

  const auto big = PuiseuxSequence::parse("12;18,22,25");
  CHECK(big.gcd_chain() == ints({12, 6, 2, 1}));
  CHECK(big.to_text() == "12;18,22,25");
}

TEST_CASE("parse_sequence rejects invalid input with the right error") {
  auto code_of = [](const std::string& text) {
    try {
      PuiseuxSequence::parse(text);
    } catch (const InvalidInput& e) {
      return e.code();
    }
    FAIL("expected rejection of " << text);
    return Errc::MalformedText;
  };
  CHECK(code_of("4;6,8") == Errc::NotCoprime);       // gcd chain ends at 2
  CHECK(code_of("4 6 7") == Errc::MalformedText);
  CHECK(code_of("4;") == Errc::MalformedText);
  CHECK(code_of("4;6,-7") == Errc::MalformedText);
  CHECK(code_of("4;7,6") == Errc::NotIncreasing);
  CHECK(code_of("4;6,6") == Errc::NotIncreasing);
  CHECK(code_of("1;2") == Errc::MultiplicityTooSmall);
  CHECK(code_of("4;8,9") == Errc::CharacteristicConditionViolated);  // D0 | q1
  CHECK(code_of("6;8,10,11") == Errc::CharacteristicConditionViolated);  // D1 | q2
  CHECK(code_of("5") == Errc::MalformedText);  // bare multiplicity, n = 0
}

TEST_CASE("semigroup generators") {
  CHECK(PuiseuxSequence::parse("4;6,7").semigroup_generators() == ints({4, 6, 13}));
  CHECK(PuiseuxSequence::parse("12;18,22,25").semigroup_generators() ==
        ints({12, 18, 40, 123}));
  CHECK(PuiseuxSequence::parse("2;3").semigroup_generators() == ints({2, 3}));
}

TEST_CASE("Milnor number and genus") {
  CHECK(PuiseuxSequence::parse("4;6,7").milnor_number() == 16);
  CHECK(PuiseuxSequence::parse("4;6,7").genus() == 8);
  CHECK(PuiseuxSequence::parse("12;18,22,25").milnor_number() == 210);
  CHECK(PuiseuxSequence::parse("12;18,22,25").genus() == 105);
  CHECK(PuiseuxSequence::parse("2;3").milnor_number() == 2);
  CHECK(PuiseuxSequence::parse("8;10,31").genus() == 42);
  CHECK(PuiseuxSequence::parse("4;30,31").genus() == 44);
}

TEST_CASE("slice genus and unknotting number equal the genus") {
  const auto k = PuiseuxSequence::parse("4;6,7");
  CHECK(k.slice_genus() == 8);
  CHECK(k.unknotting_number() == 8);
  CHECK(PuiseuxSequence::parse("2;3").unknotting_number() == 1);
  CHECK(PuiseuxSequence::parse("12;18,22,25").slice_genus() == 105);
}

TEST_CASE("cable stages") {
  auto stages = [](const std::string& text) {
    std::vector<std::pair<Int, Int>> out;
    for (auto& s : PuiseuxSequence::parse(text).cable_stages().stages) out.push_back(s);
    return out;
  };
  CHECK(stages("4;6,7") == std::vector<std::pair<Int, Int>>{{2, 3}, {2, 13}});
  CHECK(stages("12;18,22,25") ==
        std::vector<std::pair<Int, Int>>{{2, 3}, {3, 20}, {2, 123}});
  CHECK(stages("8;10,31") == std::vector<std::pair<Int, Int>>{{4, 5}, {2, 61}});
  CHECK(stages("4;30,31") == std::vector<std::pair<Int, Int>>{{2, 15}, {2, 61}});
}

TEST_CASE("torus knot canonicalization") {
  const auto k = KnotSpec::torus(5, 3);
  CHECK(k.sequence().terms() == ints({3, 5}));
  CHECK(k.is_torus());
  CHECK(k.display() == "T(3,5)");
  CHECK_THROWS_AS(KnotSpec::torus(4, 4), InvalidInput);
  CHECK_THROWS_AS(KnotSpec::torus(4, 6), InvalidInput);
  CHECK_THROWS_AS(KnotSpec::torus(1, 5), InvalidInput);
}

TEST_CASE("properties over the small exhaustive corpus") {
  const auto corpus = testing::enumerate_sequences(30, 3);
  REQUIRE(corpus.size() > 500);
  for (const auto& seq : corpus) {
    // gcd chain decreases strictly under divisibility, down to 1
    const auto& d = seq.gcd_chain();
    for (std::size_t i = 1; i < d.size(); ++i) {
      CHECK(d[i] < d[i - 1]);
      CHECK(d[i - 1] % d[i] == 0);
    }
    CHECK(d.back() == 1);

    const auto s = seq.semigroup_generators();
    CHECK(s[1] == seq.terms()[1]);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);

    CHECK(seq.milnor_number() % 2 == 0);  // genus integrality
  }
}

TEST_CASE("torus knots round-trip through cable stages and the genus closed form") {
  for (int a = 2; a <= 30; ++a) {
    for (int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto seq = KnotSpec::torus(a, b).sequence();
      const auto stages = seq.cable_stages().stages;
      REQUIRE(stages.size() == 1);
      CHECK(stages[0] == std::pair<Int, Int>(a, b));
      CHECK(seq.genus() == Int(a - 1) * (b - 1) / 2);
    }
  }
}
