#include <doctest.h>

#include "trapgame/rational.hpp"

using namespace trapgame;

TEST_CASE("rat_string always prints numerator and denominator") {
  CHECK(rat_string(Rat(5, 3)) == "5/3");
  CHECK(rat_string(Rat(4)) == "4/1");
  CHECK(rat_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_string(Rat(0)) == "0/1");
  CHECK(rat_string(Rat(6, 4)) == "3/2");  // lowest terms
}

TEST_CASE("parse_rat accepts fractions, integers, and decimals") {
  CHECK(parse_rat("3/7") == Rat(3, 7));
  CHECK(parse_rat("-3/7") == Rat(-3, 7));
  CHECK(parse_rat("12") == Rat(12));
  CHECK(parse_rat("2.5") == Rat(5, 2));
  CHECK(parse_rat("0.125") == Rat(1, 8));
  CHECK(parse_rat("-0.2") == Rat(-1, 5));
  CHECK(parse_rat("1.5/0.5") == Rat(3));
  CHECK(parse_rat("0") == Rat(0));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("."), std::invalid_argument);
}

TEST_CASE("string round trip is lossless") {
  for (const Rat& r : {Rat(0), Rat(17, 5), Rat(-22, 7), Rat(1000000007)}) {
    CHECK(parse_rat(rat_string(r)) == r);
  }
}

TEST_CASE("floor and ceil handle signs and integers") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(6, 3)) == 2);
  CHECK(ceil_rat(Rat(6, 3)) == 2);
  CHECK(floor_rat(Rat(0)) == 0);
}

TEST_CASE("rat_pow uses exact arithmetic") {
  CHECK(rat_pow(Rat(2, 3), 5) == Rat(32, 243));
  CHECK(rat_pow(Rat(7, 4), 0) == Rat(1));
  CHECK(rat_pow(Rat(0), 3) == Rat(0));
  CHECK(rat_pow(Rat(-1, 2), 2) == Rat(1, 4));
}

TEST_CASE("to_double matches the rational") {
  CHECK(to_double(Rat(1, 2)) == 0.5);
  CHECK(to_double(Rat(-3, 4)) == -0.75);
}
