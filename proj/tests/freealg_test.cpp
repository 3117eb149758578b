#include <gtest/gtest.h>

#include "skw/freealg.hpp"
#include "support.hpp"

using namespace skw;
using test::word_poly;

namespace {

const CyclotomicField F;
const auto names = default_names(3);

NcPoly<QZeta> parse(const std::string& s) { return parse_poly(F, s, names); }

}  // namespace

TEST(NcPoly, MultiplicationConcatenatesWords) {
  auto p = word_poly({0}) + word_poly({1});
  auto q = word_poly({2});
  EXPECT_EQ(p * q, word_poly({0, 2}) + word_poly({1, 2}));
  EXPECT_EQ(q * p, word_poly({2, 0}) + word_poly({2, 1}));
}

TEST(NcPoly, CancellationRemovesTerms) {
  auto p = word_poly({0, 1}) - word_poly({0, 1});
  EXPECT_TRUE(p.is_zero());
  EXPECT_FALSE(p.homogeneous_degree());
}

TEST(NcPoly, HomogeneousDegree) {
  EXPECT_EQ(word_poly({0, 1, 2}).homogeneous_degree(), 3u);
  EXPECT_FALSE((word_poly({0}) + word_poly({0, 1})).homogeneous_degree());
}

TEST(Parse, DottedAndStarredWordsAgree) {
  EXPECT_EQ(parse("x.y"), parse("x*y"));
  EXPECT_EQ(parse("2*w*x.y"), word_poly({0, 1}, QZeta(Rational(0), Rational(2))));
  EXPECT_EQ(parse("(1+w)*z.z"), word_poly({2, 2}, QZeta(Rational(1), Rational(1))));
  EXPECT_EQ(parse("-x.y + y.x"), word_poly({1, 0}) - word_poly({0, 1}));
  EXPECT_EQ(parse("3"), NcPoly<QZeta>::monomial(Word(), QZeta(3)));
  EXPECT_TRUE(parse("0").is_zero());
}

TEST(Parse, RoundTripsThroughFormatter) {
  for (const char* s : {"1*z.y + 1*y.z + 1*x.x", "(-1-1*w)*z.y + 1*w*y.z + 1*x.x", "-1/2*x + 3*1"}) {
    auto p = parse(s);
    EXPECT_EQ(parse(format_poly(p, names)), p) << s;
  }
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_poly(F, "x.y + $", names, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("column 7"), std::string::npos);
  }
  EXPECT_THROW(parse("x*"), Error);
  EXPECT_THROW(parse("q.x"), Error);
}

TEST(Presentation, SklyaninRelations) {
  auto p = sklyanin_presentation(F, QZeta(1), QZeta(1), QZeta(1));
  ASSERT_EQ(p.relations.size(), 3u);
  EXPECT_EQ(format_poly(p.relations[0], names), "1*z.y + 1*y.z + 1*x.x");
  EXPECT_EQ(p.coefficient_matrix().rows(), 3u);
  EXPECT_EQ(p.coefficient_matrix().cols(), 9u);
}

TEST(Presentation, ScalingInvariance) {
  std::mt19937_64 rng(301);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    QZeta a = test::random_scalar(F, rng), b = test::random_scalar(F, rng), c = test::random_scalar(F, rng);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    QZeta l = test::random_nonzero(F, rng);
    std::optional<QuadPresentation<CyclotomicField>> p, q;
    try {
      p = sklyanin_presentation(F, a, b, c);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::dependent_relations);
      EXPECT_THROW(sklyanin_presentation(F, l * a, l * b, l * c), Error);
      continue;
    }
    q = sklyanin_presentation(F, l * a, l * b, l * c);
    ASSERT_TRUE(relation_span_equal(*p, *q));
    ASSERT_EQ(p->relations, q->relations);
  }
}

TEST(Presentation, DegenerateLocus) {
  QZeta w = QZeta::zeta();
  EXPECT_TRUE(in_degenerate_locus(F, QZeta(1), QZeta(0), QZeta(0)));
  EXPECT_TRUE(in_degenerate_locus(F, QZeta(1), w, w * w));
  EXPECT_TRUE(in_degenerate_locus(F, QZeta(2), QZeta(2), QZeta(2) * w));
  EXPECT_FALSE(in_degenerate_locus(F, QZeta(1), QZeta(2), QZeta(3)));
  EXPECT_FALSE(in_degenerate_locus(F, QZeta(1), QZeta(1), QZeta(0)));
}

TEST(Presentation, TextFormatRoundTrip) {
  auto p = sklyanin_presentation(F, QZeta(1), QZeta::zeta(), QZeta(1));
  auto q = parse_presentation_text(F, format_presentation(p));
  EXPECT_TRUE(relation_span_equal(p, q));
}

TEST(Presentation, TextFormatErrors) {
  try {
    parse_presentation_text(F, "generators: x y z\n1*x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_quadratic);
  }
  try {
    parse_presentation_text(F, "generators: x y z\n1*y.z + 1*z.y\n2*y.z + 2*z.y\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dependent_relations);
  }
  EXPECT_THROW(parse_presentation_text(F, "1*x.x\n"), Error);
}

TEST(Presentation, SpanEqualityIsEquivalenceThousandCases) {
  PrimeField f(7);
  std::mt19937_64 rng(302);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    Matrix<Fp> base(2, 9, f.zero());
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 9; ++c) base(r, c) = test::random_scalar(f, rng);
    }
    if (rank(f, base) < 2) continue;
    auto mix = [&](const Matrix<Fp>& m) {
      for (;;) {
        Fp a = test::random_scalar(f, rng), b = test::random_scalar(f, rng), c = test::random_scalar(f, rng),
           d = test::random_scalar(f, rng);
        if ((a * d - b * c).is_zero()) continue;
        Matrix<Fp> out(2, 9, f.zero());
        for (std::size_t k = 0; k < 9; ++k) {
          out(0, k) = a * m(0, k) + b * m(1, k);
          out(1, k) = c * m(0, k) + d * m(1, k);
        }
        return presentation_from_rows(f, default_names(3), out);
      }
    };
    auto p = presentation_from_rows(f, default_names(3), base);
    auto q = mix(base), r = mix(base);
    ASSERT_TRUE(relation_span_equal(p, p));
    ASSERT_EQ(relation_span_equal(p, q), relation_span_equal(q, p));
    ASSERT_TRUE(relation_span_equal(p, q) && relation_span_equal(q, r) && relation_span_equal(p, r));
    Matrix<Fp> other = base;
    other(0, 0) += f.one();
    auto s = presentation_from_rows(f, default_names(3), other);
    if (!relation_span_equal(p, s)) {
      ASSERT_FALSE(relation_span_equal(s, p));
    }
  }
}

TEST(NcPoly, RingAxiomsThousandCases) {
  std::mt19937_64 rng(303);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    auto a = test::random_poly(F, rng), b = test::random_poly(F, rng), c = test::random_poly(F, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}
