#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcolor/scalar.hpp"

using namespace pcolor;

TEST_CASE("field specs") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(!q.is_prime_field());
  CHECK(q.characteristic() == 0);
  CHECK(q.to_string() == "Q");

  const FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK(f5.is_prime_field());
  CHECK(f5.characteristic() == 5);
  CHECK(f5.to_string() == "F_5");

  CHECK(FieldSpec::prime_field(2).characteristic() == 2);
  CHECK_THROWS_AS(FieldSpec::prime_field(4), ValidationError);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), ValidationError);
  CHECK_THROWS_AS(FieldSpec::prime_field(0), ValidationError);

  CHECK(q == FieldSpec::rationals());
  CHECK(f5 == FieldSpec::prime_field(5));
  CHECK(!(q == f5));
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(5));
  CHECK(is_prime_u64(1000003));
  CHECK(is_prime_u64((1ull << 61) - 1));
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(4));
  CHECK(!is_prime_u64(561));      // Carmichael
  CHECK(!is_prime_u64(1000001));  // 101 * 9901
}

TEST_CASE("rational arithmetic is exact and canonical") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar third = Scalar::parse(q, "1/3");
  const Scalar sixth = Scalar::parse(q, "1/6");
  CHECK((third + sixth).str() == "1/2");
  CHECK((third - third).is_zero());
  CHECK((third * Scalar::from_integer(q, 3)).is_one());
  CHECK((Scalar::one(q) / third).str() == "3");
  CHECK((-third).str() == "-1/3");
  CHECK(third.inv().str() == "3");
  CHECK(Scalar::from_integer(q, -6).str() == "-6");

  // Non-lowest-terms and negative-denominator inputs canonicalize.
  CHECK(Scalar::parse(q, "4/6").str() == "2/3");
  CHECK(Scalar::parse(q, "4/6") == Scalar::parse(q, "2/3"));
  CHECK(third.canonicalized() == third);

  CHECK(Scalar::parse(q, "0").is_zero());
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse(q, "abc"), ParseError);
  CHECK_THROWS_AS(Scalar::zero(q).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f5 = FieldSpec::prime_field(5);
  const Scalar two = Scalar::from_integer(f5, 2);
  const Scalar three = Scalar::from_integer(f5, 3);
  CHECK((two + three).is_zero());
  CHECK((two * three).is_one());
  CHECK(two.inv() == three);
  CHECK((-two) == three);
  CHECK(Scalar::from_integer(f5, 7).str() == "2");
  CHECK(Scalar::from_integer(f5, -1).str() == "4");
  CHECK(Scalar::parse(f5, "7").str() == "2");
  CHECK(Scalar::parse(f5, "-1").str() == "4");
  CHECK_THROWS_AS(Scalar::zero(f5).inv(), DivisionByZero);
}

TEST_CASE("powers") {
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK(Scalar::from_integer(q, 2).pow(-3).str() == "1/8");
  CHECK(Scalar::from_integer(q, 2).pow(10).str() == "1024");
  CHECK(Scalar::zero(q).pow(0).is_one());
  CHECK(Scalar::from_integer(f5, 2).pow(4).is_one());
  CHECK(Scalar::from_integer(f5, 2).pow(-1) == Scalar::from_integer(f5, 3));
  CHECK_THROWS_AS(Scalar::zero(f5).pow(-1), DivisionByZero);
}

TEST_CASE("mixed-field operations are rejected") {
  const Scalar a = Scalar::one(FieldSpec::rationals());
  const Scalar b = Scalar::one(FieldSpec::prime_field(5));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
  CHECK(!(a == b));
}
