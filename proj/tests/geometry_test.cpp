#include <gtest/gtest.h>

#include "skw/geometry.hpp"
#include "support.hpp"

using namespace skw;

namespace {

const CyclotomicField F;
const QZeta w = QZeta::zeta();
using Pt = ProjPoint<QZeta>;

QuadPresentation<CyclotomicField> S(QZeta a, QZeta b, QZeta c) { return sklyanin_presentation(F, a, b, c); }

Pt pt(QZeta x, QZeta y, QZeta z) { return {{x, y, z}}; }

}  // namespace

TEST(Multilinear, CountsAndSupport) {
  EXPECT_EQ(multilinearize(S(1, 1, 1), 2).size(), 3u);
  EXPECT_EQ(multilinearize(S(1, 1, 1), 5).size(), 12u);
  auto forms = multilinearize(S(1, 1, 1), 2);
  for (const auto& f : forms) EXPECT_EQ(f.coeffs.size(), 3u);
  EXPECT_EQ(forms[0].to_string(default_names(3)), "1*x1.x0 + 1*y1.z0 + 1*z1.y0");
  auto mono = multilinearize(S(1, 0, 0), 2);
  EXPECT_EQ(mono[0].to_string(default_names(3)), "1*y1.z0");
}

TEST(MMatrix, KnownValues) {
  auto m = m_matrix(F, QZeta(1), QZeta(1), QZeta(1), pt(1, 1, 1));
  EXPECT_EQ(rank(F, m), 1u);
  EXPECT_TRUE(det3(m).is_zero());
  EXPECT_EQ(det3(m_matrix(F, QZeta(1), QZeta(1), QZeta(1), pt(1, 0, 0))), QZeta(-1));
  auto line = m_matrix(F, QZeta(1), QZeta(1), QZeta(1), pt(1, -3, 2));
  EXPECT_TRUE(det3(line).is_zero());
  EXPECT_EQ(rank(F, line), 2u);
}

TEST(MMatrix, PresentationFormMatchesRelations) {
  std::mt19937_64 rng(501);
  auto p = S(1, w, w * w);
  auto forms = multilinearize(p, 2);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    Pt a{{test::random_scalar(F, rng), test::random_scalar(F, rng), test::random_scalar(F, rng)}};
    Pt b{{test::random_scalar(F, rng), test::random_scalar(F, rng), test::random_scalar(F, rng)}};
    auto m = m_matrix(p, a);
    for (std::size_t r = 0; r < 3; ++r) {
      QZeta s;
      for (std::size_t k = 0; k < 3; ++k) s += m(r, k) * b.c[k];
      ASSERT_EQ(s, forms[r].evaluate({a, b}));
    }
  }
}

TEST(Curve, MembershipExamples) {
  EXPECT_TRUE(on_curve_E(F, QZeta(1), QZeta(1), QZeta(1), pt(1, 1, 1)));
  EXPECT_FALSE(on_curve_E(F, QZeta(1), QZeta(1), QZeta(1), pt(1, 0, 0)));
  // at (1,0,0) the cubic reduces to xyz
  EXPECT_FALSE(on_curve_E(F, QZeta(1), QZeta(0), QZeta(0), pt(1, 2, 3)));
  EXPECT_TRUE(on_curve_E(F, QZeta(1), QZeta(0), QZeta(0), pt(0, 2, 3)));
}

TEST(Curve, DeterminantEqualsCubicThousandCases) {
  std::mt19937_64 rng(502);
  for (auto [a, b, c] : {std::array<QZeta, 3>{1, 1, 1}, {1, w, w}, {1, 1, w}, {1, 0, 0}, {1, 2, 3}}) {
    for (std::size_t i = 0; i < test::kCases; ++i) {
      Pt p{{test::random_scalar(F, rng), test::random_scalar(F, rng), test::random_scalar(F, rng)}};
      ASSERT_EQ(det3(m_matrix(F, a, b, c, p)), e_cubic(F, a, b, c, p));
    }
  }
}

TEST(Extension, UniqueOffSpecialPoints) {
  auto ext = extend_point(S(1, 1, 1), pt(1, -3, 2));
  ASSERT_EQ(ext.kind, Extension<CyclotomicField>::Kind::unique);
  EXPECT_EQ(*ext.point, pt(1, 1, 1));
}

TEST(Extension, PencilAtRootPoints) {
  auto p = S(1, 1, 1);
  auto e0 = extend_point(p, pt(1, 1, 1));
  ASSERT_EQ(e0.kind, Extension<CyclotomicField>::Kind::pencil);
  EXPECT_EQ(*e0.theta, std::make_pair(QZeta(-1), QZeta(-1)));
  auto e1 = extend_point(p, pt(1, w, w * w));
  ASSERT_EQ(e1.kind, Extension<CyclotomicField>::Kind::pencil);
  EXPECT_EQ(*e1.theta, std::make_pair(-(w * w), -w));
  EXPECT_THROW(extend_point(p, pt(1, 0, 0)), Error);
}

TEST(Extension, RankDichotomyOnCurve) {
  auto p = S(1, 1, 1);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(rank(F, m_matrix(p, root_point(F, k))), 1u);
  std::mt19937_64 rng(503);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    int k = static_cast<int>(rng() % 3);
    QZeta y = test::random_scalar(F, rng), z = test::random_scalar(F, rng);
    if (y.is_zero() && z.is_zero()) continue;
    Pt q = line_point(F, k, y, z);
    if (q == root_point(F, (k + 1) % 3) || q == root_point(F, (k + 2) % 3)) continue;
    ASSERT_EQ(rank(F, m_matrix(p, q)), 2u);
  }
}

TEST(Components, Patterns) {
  auto specs = component_specs(4);
  ASSERT_EQ(specs.size(), 6u);
  EXPECT_EQ(specs[0].to_string(), "Line(1) x Point(1) x Line(1) x Point(1)");
  auto d3 = component_specs(3);
  int two_lines = 0;
  for (const auto& s : d3) two_lines += s.line_count() == 2;
  EXPECT_EQ(two_lines, 3);
}

TEST(Components, SingularLocusHasSixPairwisePoints) {
  for (std::size_t d = 2; d <= 6; ++d) {
    auto sing = singular_locus(d);
    ASSERT_EQ(sing.size(), 6u);
    for (const auto& s : sing) EXPECT_EQ(s.components.size(), 2u);
  }
  auto s2 = singular_locus(2);
  std::vector<std::vector<int>> labels;
  for (const auto& s : s2) labels.push_back(s.labels);
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}));
}

TEST(Enumeration, PrimeSevenMatchesComponents) {
  PrimeField f(7);
  auto p = sklyanin_presentation(f, f.one(), f.one(), f.one());
  auto v2 = enumerate_Vd(p, 2);
  EXPECT_EQ(v2.size(), 42u);
  EXPECT_EQ(v2, component_union(f, 2));
  EXPECT_EQ(v2, enumerate_Vd_bruteforce(p, 2));
  EXPECT_EQ(enumerate_Vd(p, 3), component_union(f, 3));
  std::size_t doubled = 0;
  for (const auto& t : v2) doubled += component_membership(f, t).size() == 2;
  EXPECT_EQ(doubled, 6u);
}

TEST(Enumeration, PrimeThirteenMatchesComponents) {
  PrimeField f(13);
  auto p = sklyanin_presentation(f, f.one(), f.one(), f.one());
  EXPECT_EQ(enumerate_Vd(p, 2), component_union(f, 2));
  EXPECT_EQ(enumerate_Vd(p, 3), component_union(f, 3));
}

TEST(Enumeration, ChainsExtend) {
  PrimeField f(7);
  auto p = sklyanin_presentation(f, f.one(), f.one(), f.one());
  auto v2 = enumerate_Vd(p, 2), v3 = enumerate_Vd(p, 3);
  for (const auto& t : v2) {
    std::size_t ext = 0;
    for (const auto& u : v3) ext += std::equal(t.begin(), t.end(), u.begin());
    bool special = false;
    for (int k = 0; k < 3; ++k) special = special || to_key(root_point(f, k)) == t.back();
    EXPECT_GE(ext, 1u);
    EXPECT_EQ(ext == 1, !special);
  }
}

TEST(Enumeration, BoundEnforced) {
  PrimeField f(7);
  auto p = sklyanin_presentation(f, f.one(), f.one(), f.one());
  EXPECT_THROW(enumerate_Vd(p, 6), Error);
}

TEST(Enumeration, MonomialPointSchemeIsLarger) {
  PrimeField f(7);
  auto p = sklyanin_presentation(f, f.one(), f.zero(), f.zero());
  auto v = enumerate_Vd(p, 2);
  EXPECT_EQ(v, enumerate_Vd_bruteforce(p, 2));
  for (const auto& t : v) {
    auto a = from_key(f, t[0]), b = from_key(f, t[1]);
    for (const auto& form : multilinearize(p, 2)) EXPECT_TRUE(form.evaluate({a, b}).is_zero());
  }
}
