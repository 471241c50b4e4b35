#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "twa/errors.hpp"
#include "twa/weight.hpp"

using namespace twa;

namespace {

Weight q(long n, long d = 1) { return Weight(Rational(n, d)); }

const SemiringTag kScalarTags[] = {SemiringTag::MaxPlus, SemiringTag::MinPlus};

Weight random_weight(std::mt19937& rng) {
  if (std::bernoulli_distribution(0.2)(rng)) return Weight::zero();
  return Weight(testing::random_rational(rng, -6, 6, true));
}

}  // namespace

TEST_CASE("oplus") {
  CHECK(oplus(q(3), Weight::zero(), SemiringTag::MaxPlus) == q(3));
  CHECK(oplus(q(2), q(5), SemiringTag::MaxPlus) == q(5));
  CHECK(oplus(q(2), q(5), SemiringTag::MinPlus) == q(2));
  CHECK(oplus(q(-1, 2), q(1, 3), SemiringTag::MaxPlus) == q(1, 3));
  CHECK(oplus(Weight::zero(), q(-4), SemiringTag::MinPlus) == q(-4));
  CHECK(oplus(Weight::zero(), Weight::one(), SemiringTag::Boolean) == Weight::one());
}

TEST_CASE("otimes") {
  CHECK(otimes(q(3), Weight::zero(), SemiringTag::MaxPlus).is_zero());
  CHECK(otimes(q(1), q(1), SemiringTag::MaxPlus) == q(2));
  CHECK(otimes(q(2, 3), q(1, 3), SemiringTag::MinPlus) == q(1));
  CHECK(otimes(Weight::one(), Weight::one(), SemiringTag::Boolean) == Weight::one());
}

TEST_CASE("mixed or unsupported tags are rejected") {
  CHECK_THROWS_AS(oplus(q(1), q(2), SemiringTag::MaxPlusPair), SemiringError);
  CHECK_THROWS_AS(otimes(q(1), q(2), SemiringTag::MaxPlusPair), SemiringError);
  CHECK_THROWS_AS(check_conforms(q(1), SemiringTag::Boolean), SemiringError);
  CHECK_THROWS_AS(oplus(PairWeight(1, 2), PairWeight(3, 4), SemiringTag::MaxPlus), SemiringError);
  CHECK_THROWS_AS(Weight::zero().value(), SemiringError);
}

TEST_CASE("negate and project") {
  CHECK(negate_weight(q(3)) == q(-3));
  CHECK(negate_weight(Weight::zero()).is_zero());
  CHECK(negate_weight(q(-5, 2)) == q(5, 2));
  CHECK(boolean_projection(q(7)) == Weight::one());
  CHECK(boolean_projection(q(-3)) == Weight::one());
  CHECK(boolean_projection(Weight::zero()).is_zero());
}

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(q(4, 6) == q(2, 3));
  CHECK(q(4, 6).value().get_den() == 3);
  CHECK(q(3, -6).value().get_den() == 2);
}

TEST_CASE("semiring laws hold on random exact weights") {
  std::mt19937 rng(17);
  for (int round = 0; round < 2000; ++round) {
    Weight x = random_weight(rng), y = random_weight(rng), z = random_weight(rng);
    for (SemiringTag t : kScalarTags) {
      CAPTURE(x);
      CAPTURE(y);
      CAPTURE(z);
      CHECK(oplus(oplus(x, y, t), z, t) == oplus(x, oplus(y, z, t), t));
      CHECK(oplus(x, y, t) == oplus(y, x, t));
      CHECK(oplus(x, x, t) == x);
      CHECK(otimes(otimes(x, y, t), z, t) == otimes(x, otimes(y, z, t), t));
      CHECK(otimes(x, oplus(y, z, t), t) == oplus(otimes(x, y, t), otimes(x, z, t), t));
      CHECK(otimes(x, Weight::zero(), t).is_zero());
      CHECK(otimes(x, Weight::one(), t) == x);
      CHECK(oplus(x, Weight::zero(), t) == x);
    }
    CHECK(negate_weight(negate_weight(x)) == x);
    CHECK(negate_weight(oplus(x, y, SemiringTag::MaxPlus)) ==
          oplus(negate_weight(x), negate_weight(y), SemiringTag::MinPlus));
    for (SemiringTag t : kScalarTags) {
      CHECK(boolean_projection(oplus(x, y, t)) ==
            oplus(boolean_projection(x), boolean_projection(y), SemiringTag::Boolean));
      CHECK(boolean_projection(otimes(x, y, t)) ==
            otimes(boolean_projection(x), boolean_projection(y), SemiringTag::Boolean));
    }
  }
}

TEST_CASE("pair weights") {
  const auto t = SemiringTag::MaxPlusPair;
  CHECK(otimes(PairWeight(1, 2), PairWeight(3, -4), t) == PairWeight(4, -2));
  CHECK(oplus(PairWeight(1, 5), PairWeight(3, -4), t) == PairWeight(3, 5));
  CHECK(otimes(PairWeight(1, 2), PairWeight::zero(), t).is_zero());
  CHECK(oplus(PairWeight::zero(), PairWeight(1, 2), t) == PairWeight(1, 2));
  CHECK_THROWS_AS(check_conforms(PairWeight(1, 2), SemiringTag::MaxPlus), SemiringError);
}

TEST_CASE("weight literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+2") == 2);
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("0.000000001") == Rational(1, 1000000000));
  for (const char* bad : {"", "-", "1/0", "0.0000000001", "abc", "1.", ".5", "1/-2", "1e3", "2/3/4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK(format_weight(Weight::zero(), SemiringTag::MaxPlus) == "-inf");
  CHECK(format_weight(Weight::zero(), SemiringTag::MinPlus) == "+inf");
  CHECK(format_weight(PairWeight(1, -1), SemiringTag::MaxPlusPair) == "1,-1");
}

TEST_CASE("literal round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    Rational r = testing::random_rational(rng, -50, 50, true);
    CHECK(parse_rational(format_rational(r)) == r);
  }
}
