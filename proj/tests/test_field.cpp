#include <gtest/gtest.h>

#include "support.hpp"

using namespace modlie;
using modlie::testing::random_scalar;

TEST(Field, RejectsNonPrimesAndLargePrimes) {
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_NO_THROW(Field::prime(2147483647));
  EXPECT_THROW(Field::prime(4294967291ULL), Error);
  try {
    Field::prime(4);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParameters);
  }
}

TEST(Field, Characteristic) {
  EXPECT_EQ(Field::prime(7).characteristic(), 7u);
  EXPECT_EQ(Field::rationals().characteristic(), 0u);
}

TEST(Field, InverseOfTwoInF5) {
  const Field f = Field::prime(5);
  EXPECT_EQ(f.from_int(2).inv(), f.from_int(3));
}

TEST(Field, NegatedZeroIsZero) {
  for (std::uint64_t p : {2, 3, 5, 7, 97}) {
    const Field f = Field::prime(p);
    EXPECT_TRUE((-f.zero()).is_zero());
  }
}

TEST(Field, RationalSum) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.parse("1/2") + q.parse("1/3"), q.parse("5/6"));
  EXPECT_EQ((q.parse("1/2") + q.parse("1/3")).to_string(), "5/6");
}

TEST(Field, RationalsStayReduced) {
  const Field q = Field::rationals();
  const Scalar a = q.parse("6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(numerator(a.rational()), -3);
  EXPECT_EQ(denominator(a.rational()), 2);
}

TEST(Field, RationalsDoNotOverflow) {
  const Field q = Field::rationals();
  Scalar x = q.from_int(3);
  for (int i = 0; i < 7; ++i) x = x * x;
  EXPECT_EQ(x, q.from_int(3).pow(128));
  EXPECT_GT(x.to_string().size(), 60u);
}

TEST(Field, ParseReducesModP) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.parse("-3"), f.from_int(4));
  EXPECT_EQ(f.parse("10"), f.from_int(3));
  EXPECT_EQ(f.parse("2/5"), f.from_int(2) * f.from_int(5).inv());
  EXPECT_THROW(f.parse("1/7"), Error);
  EXPECT_THROW(f.parse("abc"), Error);
}

TEST(Field, DivisionByZero) {
  for (const Field& f : {Field::prime(3), Field::rationals()}) {
    try {
      (void)f.zero().inv();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    EXPECT_THROW((void)(f.one() / f.zero()), Error);
  }
}

TEST(Field, MixedFields) {
  try {
    (void)(Field::prime(3).one() + Field::prime(5).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
  }
  EXPECT_THROW((void)(Field::prime(3).one() * Field::rationals().one()), Error);
}

TEST(Field, FrobeniusExamples) {
  EXPECT_EQ(frobenius(Field::prime(3).from_int(2)), Field::prime(3).from_int(2));
  EXPECT_EQ(frobenius(Field::prime(5).zero()), Field::prime(5).zero());
  EXPECT_EQ(frobenius(Field::prime(7).from_int(3)), Field::prime(7).from_int(3));
  try {
    (void)frobenius(Field::rationals().one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
  }
}

TEST(Field, InverseAndFrobeniusExhaustiveUpTo97) {
  for (std::uint64_t p = 2; p <= 97; ++p) {
    if (!Field::is_prime_number(p)) continue;
    const Field f = Field::prime(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const Scalar x(f, a);
      EXPECT_EQ(frobenius(x), x) << "p=" << p << " a=" << a;
      if (a != 0) {
        EXPECT_TRUE((x * x.inv()).is_one()) << "p=" << p << " a=" << a;
      }
    }
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::prime(2147483647),
                         Field::rationals()}) {
    for (int k = 0; k < 1000; ++k) {
      const Scalar a = random_scalar(f, rng);
      const Scalar b = random_scalar(f, rng);
      const Scalar c = random_scalar(f, rng);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
      if (!b.is_zero()) {
        ASSERT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(Field, LargePrimeMultiplicationUsesWideProducts) {
  const Field f = Field::prime(2147483647);
  const Scalar a = f.from_int(2147483646);  // -1
  EXPECT_TRUE((a * a).is_one());
  EXPECT_EQ(a.pow(2147483646), f.one());
}

TEST(Field, Formatting) {
  EXPECT_EQ(Field::prime(5).from_int(-1).to_string(), "4");
  EXPECT_EQ(Field::rationals().from_int(-7).to_string(), "-7");
  EXPECT_EQ(Field::prime(5).name(), "F_5");
  EXPECT_EQ(Field::rationals().name(), "Q");
}
