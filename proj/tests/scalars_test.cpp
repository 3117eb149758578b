#include <gtest/gtest.h>

#include <limits>

#include "skw/scalars.hpp"
#include "support.hpp"

using namespace skw;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_TRUE(Rational(7, 7).is_one());
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "5", "-5", "3/7", "-22/7", "123456789012345678901234567890"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, OverflowFallsBackToGmp) {
  const long long big = std::numeric_limits<long long>::max();
  Rational a(big), b(big);
  Rational p = a * b;
  EXPECT_FALSE(p.is_small());
  EXPECT_EQ(p.to_mpq(), mpq_class(mpz_class(static_cast<long>(big)) * mpz_class(static_cast<long>(big))));
  Rational back = p / b;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, a);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(0).inverse(), Error);
  EXPECT_THROW((Rational(1) / Rational(0)), Error);
}

TEST(QZeta, ZetaIsPrimitiveCubeRoot) {
  QZeta w = QZeta::zeta();
  EXPECT_FALSE(w.is_one());
  EXPECT_TRUE((w * w * w).is_one());
  EXPECT_TRUE((QZeta(1) + w + w * w).is_zero());
  EXPECT_EQ((w * w).to_string(), "-1-1*w");
}

TEST(QZeta, InverseAndNorm) {
  QZeta a(Rational(2), Rational(3));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(a.norm(), Rational(4 - 6 + 9));
  EXPECT_EQ(a * a.conj(), QZeta(a.norm()));
}

TEST(QZeta, ParseForms) {
  QZeta w = QZeta::zeta();
  EXPECT_EQ(QZeta::parse("w"), w);
  EXPECT_EQ(QZeta::parse("zeta"), w);
  EXPECT_EQ(QZeta::parse("1+2*w"), QZeta(Rational(1), Rational(2)));
  EXPECT_EQ(QZeta::parse("(-1-1*w)"), w * w);
  EXPECT_EQ(QZeta::parse("-1/2"), QZeta(Rational(-1, 2)));
  EXPECT_THROW(QZeta::parse("w+"), Error);
}

TEST(Fp, ArithmeticModSeven) {
  PrimeField f(7);
  EXPECT_EQ((f.element(3) * f.element(5)).value(), 1u);
  EXPECT_EQ(f.from_int(-1).value(), 6u);
  EXPECT_EQ(f.element(3).inverse().value(), 5u);
  EXPECT_TRUE(f.zeta().pow(3).is_one());
  EXPECT_FALSE(f.zeta().is_one());
  EXPECT_THROW(f.zero().inverse(), Error);
}

TEST(PrimeField, RejectsPrimesWithoutCubeRoots) {
  EXPECT_THROW(PrimeField(5), Error);
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_NO_THROW(PrimeField(13));
  try {
    PrimeField bad(11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_cube_root);
  }
}

TEST(FieldSpec, ParsesAllKinds) {
  EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("qzeta"), FieldSpec::cyclotomic3());
  EXPECT_EQ(FieldSpec::parse("fp:7"), FieldSpec::prime(7));
  EXPECT_EQ(FieldSpec::parse("fp:13").to_string(), "fp:13");
  EXPECT_THROW(FieldSpec::parse("fp:"), Error);
  EXPECT_THROW(FieldSpec::parse("reals"), Error);
}

TEST(Specialize, ZetaMapsToChosenRoot) {
  PrimeField f(7);
  EXPECT_EQ(specialize(QZeta::zeta(), f), f.zeta());
  EXPECT_EQ(specialize(QZeta(Rational(1, 2)), f), f.from_ratio(1, 2));
  EXPECT_THROW(specialize(QZeta(Rational(1, 7)), f), Error);
}

TEST(RationalField, RejectsZeta) { EXPECT_THROW(RationalField{}.parse("w"), Error); }

namespace {

template <ExactField K>
void axioms(const K& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    auto a = test::random_scalar(field, rng), b = test::random_scalar(field, rng), c = test::random_scalar(field, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

}  // namespace

TEST(FieldAxioms, RationalThousandCases) { axioms(RationalField{}, 101); }
TEST(FieldAxioms, CyclotomicThousandCases) { axioms(CyclotomicField{}, 102); }
TEST(FieldAxioms, PrimeSevenThousandCases) { axioms(PrimeField(7), 103); }
TEST(FieldAxioms, LargePrimeThousandCases) { axioms(PrimeField(10009), 104); }

TEST(Specialize, IsRingHomomorphismThousandCases) {
  PrimeField f(13);
  CyclotomicField q;
  std::mt19937_64 rng(105);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < test::kCases; ++i) {
    auto a = test::random_scalar(q, rng), b = test::random_scalar(q, rng);
    try {
      ASSERT_EQ(specialize(a + b, f), specialize(a, f) + specialize(b, f));
      ASSERT_EQ(specialize(a * b, f), specialize(a, f) * specialize(b, f));
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::bad_prime);
    }
  }
  EXPECT_GT(checked, test::kCases / 2);
}
