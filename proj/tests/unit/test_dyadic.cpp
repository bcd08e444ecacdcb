#include <doctest.h>

#include <random>

#include "ktlab/dyadic.hpp"

using ktlab::BigInt;
using ktlab::Dyadic;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng) {
  const std::uint64_t mant = rng() % 1024;
  const std::uint64_t exp = rng() % 20;
  return Dyadic::from_parts(BigInt(mant), exp);
}

}  // namespace

TEST_CASE("basic arithmetic is exact") {
  const Dyadic half = Dyadic::pow2_neg(1);
  const Dyadic quarter = Dyadic::pow2_neg(2);
  CHECK(half + quarter == Dyadic::from_parts(BigInt(3), 2));
  CHECK(half - half == Dyadic(0));
  CHECK((half - half).exponent() == 0);
  CHECK(half * quarter == Dyadic::pow2_neg(3));
  CHECK(Dyadic(3).halve() == Dyadic::from_parts(BigInt(3), 1));
  CHECK(Dyadic(3).scale2(2) == Dyadic(12));
  CHECK(Dyadic(12).scale2(-2) == Dyadic(3));
}

TEST_CASE("geometric sum matches brute-force oracle") {
  // sum_{n=1..20} 2^-n accumulated term by term.
  Dyadic sum;
  for (int n = 1; n <= 20; ++n) {
    sum += Dyadic::pow2_neg(n);
  }
  CHECK(sum == Dyadic(1) - Dyadic::pow2_neg(20));
}

TEST_CASE("subtraction below zero is an error") {
  CHECK_THROWS_AS(Dyadic::pow2_neg(2) - Dyadic::pow2_neg(1), ktlab::DyadicUnderflow);
}

TEST_CASE("canonical form invariant") {
  CHECK(Dyadic::from_parts(BigInt(4), 2) == Dyadic(1));
  CHECK(Dyadic::from_parts(BigInt(6), 3).mantissa() == 3);
  CHECK(Dyadic::from_parts(BigInt(0), 17).exponent() == 0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Dyadic d = random_dyadic(rng) + random_dyadic(rng);
    const bool canonical =
        d.is_zero() ? d.exponent() == 0 : boost::multiprecision::bit_test(d.mantissa(), 0);
    CHECK(canonical);
  }
}

TEST_CASE("associativity and commutativity on random triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const Dyadic a = random_dyadic(rng), b = random_dyadic(rng), c = random_dyadic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("string round trip is bit-exact") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Dyadic d = random_dyadic(rng);
    CHECK(Dyadic::parse(d.str()) == d);
  }
  CHECK(Dyadic::parse("5:3").str() == "5:3");
  CHECK(Dyadic::parse("7").str() == "7");
  CHECK_THROWS(Dyadic::parse("x:1"));
  CHECK_THROWS(Dyadic::parse(""));
}

TEST_CASE("ordering aligns exponents") {
  CHECK(Dyadic::pow2_neg(3) < Dyadic::pow2_neg(2));
  CHECK(Dyadic::min(Dyadic(2), Dyadic::from_parts(BigInt(3), 1)) ==
        Dyadic::from_parts(BigInt(3), 1));
  CHECK(Dyadic::max(Dyadic(2), Dyadic::from_parts(BigInt(3), 1)) == Dyadic(2));
}

TEST_CASE("pow is iterated multiplication") {
  const Dyadic rho = Dyadic::from_parts(BigInt(3), 2);  // 3/4
  Dyadic expect(1);
  for (int n = 0; n <= 10; ++n) {
    CHECK(rho.pow(n) == expect);
    expect = expect * rho;
  }
}

TEST_CASE("floor and ceil ratios bracket the exact value") {
  const Dyadic one_third_floor = ktlab::floor_ratio(Dyadic(1), Dyadic(3), 4);
  CHECK(one_third_floor == Dyadic::from_parts(BigInt(5), 4));  // 5/16
  const Dyadic one_third_ceil = ktlab::ceil_ratio(Dyadic(1), Dyadic(3), 4);
  CHECK(one_third_ceil == Dyadic::from_parts(BigInt(3), 3));  // 6/16
  // Exact ratios are returned as-is.
  CHECK(ktlab::floor_ratio(Dyadic(3), Dyadic(4), 8) == Dyadic::from_parts(BigInt(3), 2));
  CHECK(ktlab::ceil_ratio(Dyadic(3), Dyadic(4), 8) == Dyadic::from_parts(BigInt(3), 2));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Dyadic num = random_dyadic(rng);
    Dyadic den = random_dyadic(rng);
    if (den.is_zero()) continue;
    const Dyadic lo = ktlab::floor_ratio(num, den, 32);
    const Dyadic hi = ktlab::ceil_ratio(num, den, 32);
    CHECK(!(hi < lo));
    CHECK(!(num < lo * den));     // lo*den <= num
    CHECK(!(hi * den < num));     // num <= hi*den
  }
}
