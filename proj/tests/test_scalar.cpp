#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qbx/scalar.hpp"

using namespace qbx;

namespace {

Scalar rat(long long n, long long d = 1) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Scalar::rational(BigRat(BigInt(n), BigInt(d)));
}

Scalar random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("exact rational arithmetic") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK((rat(2, 4)).text() == "1/2");
  CHECK(Scalar::parse("1/-2", Field::rationals()).text() == "-1/2");  // positive denominator
  CHECK(rat(6, 3).text() == "2");
}

TEST_CASE("prime field basics") {
  Field g7 = Field::prime(7);
  CHECK(Scalar::of(g7, 3).inverse() == Scalar::of(g7, 5));  // 3*5 = 15 = 1 mod 7
  CHECK(Scalar::of(g7, 10) == Scalar::of(g7, 3));
  CHECK(Scalar::of(g7, -1) == Scalar::of(g7, 6));
  CHECK(Scalar::of(g7, 3).text() == "3 mod 7");
  CHECK_THROWS_AS(Field::prime(6), validation_error);
}

TEST_CASE("identity and field axioms on random values") {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_rational(rng);
    CHECK(a + Scalar::zero(Field::rationals()) == a);
  }
  for (int k = 0; k < 1000; ++k) {
    Scalar a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  Field g7 = Field::prime(7);
  std::uniform_int_distribution<long long> v(0, 6);
  for (int k = 0; k < 1000; ++k) {
    Scalar a = Scalar::of(g7, v(rng)), b = Scalar::of(g7, v(rng)), c = Scalar::of(g7, v(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("division") {
  CHECK(rat(3, 4) / rat(3, 2) == rat(1, 2));
  CHECK_THROWS_AS(rat(1) / rat(0), compute_error);
  CHECK_THROWS_AS(rat(0).inverse(), compute_error);
  Field g5 = Field::prime(5);
  CHECK(Scalar::of(g5, 2) / Scalar::of(g5, 3) == Scalar::of(g5, 4));  // 3*4 = 12 = 2
}

TEST_CASE("mixed fields are rejected") {
  Field g7 = Field::prime(7);
  CHECK_THROWS_AS(rat(1) + Scalar::of(g7, 1), compute_error);
  CHECK_THROWS_AS(Scalar::of(g7, 1) * Scalar::of(Field::prime(5), 1), compute_error);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(11);
  Field q = Field::rationals();
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_rational(rng);
    CHECK(Scalar::parse(a.text(), q) == a);
  }
  Field g11 = Field::prime(11);
  for (int k = 0; k < 50; ++k) {
    Scalar a = Scalar::of(g11, k);
    CHECK(Scalar::parse(a.text(), g11) == a);
  }
  CHECK(Scalar::parse("5/6", q) == rat(5, 6));
  CHECK(Scalar::parse("4 mod 11", g11) == Scalar::of(g11, 4));
  CHECK_THROWS_AS(Scalar::parse("4 mod 11", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("4 mod 7", g11), parse_error);
  CHECK_THROWS_AS(Scalar::parse("zz", q), parse_error);
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("gf:7") == Field::prime(7));
  CHECK_THROWS_AS(Field::parse("gf:8"), validation_error);
  CHECK_THROWS_AS(Field::parse("float"), validation_error);
}
