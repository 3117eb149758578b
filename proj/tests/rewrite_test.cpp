#include <gtest/gtest.h>

#include <algorithm>

#include "skw/rewrite.hpp"
#include "support.hpp"

using namespace skw;
using test::word_poly;

namespace {

const CyclotomicField F;
const QZeta w = QZeta::zeta();

QuadPresentation<CyclotomicField> S(QZeta a, QZeta b, QZeta c) { return sklyanin_presentation(F, a, b, c); }

std::vector<std::uint64_t> degenerate(std::size_t D) {
  std::vector<std::uint64_t> v{1};
  for (std::size_t d = 1; d <= D; ++d) v.push_back(3ull << (d - 1));
  return v;
}

}  // namespace

TEST(Automaton, CountsAvoidingWords) {
  FactorAutomaton a(2, {make_word({1, 1})});
  // binary words without "11": Fibonacci numbers
  EXPECT_EQ(a.count(6), (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21}));
  EXPECT_TRUE(a.accepts(make_word({1, 0, 1})));
  EXPECT_FALSE(a.accepts(make_word({0, 1, 1})));
}

TEST(Automaton, EnumerationMatchesCount) {
  FactorAutomaton a(3, {make_word({1, 2}), make_word({2, 0}), make_word({0, 1})});
  auto counts = a.count(5);
  for (std::size_t d = 0; d <= 5; ++d) {
    std::size_t n = 0;
    a.enumerate(d, [&](const Word&) { ++n; });
    EXPECT_EQ(n, counts[d]);
  }
}

TEST(Completion, DegenerateHilbertFunctions) {
  for (auto [a, b, c] : {std::array<QZeta, 3>{1, 1, 1}, {1, w, w}, {1, 1, w}, {1, 0, 0}}) {
    EXPECT_EQ(complete_to_degree(S(a, b, c), 8).hilbert_function(8), degenerate(8));
  }
}

TEST(Completion, NondegenerateProbeMatchesPolynomialRing) {
  RationalField q;
  auto rs = complete_to_degree(sklyanin_presentation(q, Rational(1), Rational(2), Rational(3)), 6);
  auto h = rs.hilbert_function(6);
  for (std::size_t d = 0; d <= 6; ++d) EXPECT_EQ(h[d], (d + 1) * (d + 2) / 2);
}

TEST(Completion, MonomialAlgebraKeepsThreeRules) {
  auto rs = complete_to_degree(S(1, 0, 0), 6);
  EXPECT_EQ(rs.rule_count(), 3u);
  auto leads = rs.leading_words();
  std::sort(leads.begin(), leads.end());
  std::vector<Word> expect{make_word({0, 1}), make_word({1, 2}), make_word({2, 0})};
  EXPECT_EQ(leads, expect);
  EXPECT_TRUE(rs.check_confluence());
}

TEST(Completion, MonomialNormalWordsInDegreeTwo) {
  auto rs = complete_to_degree(S(1, 0, 0), 3);
  auto words = rs.normal_words(2);
  std::vector<std::string> got;
  for (const auto& u : words) got.push_back(format_word(u, default_names(3)));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"x.x", "x.z", "y.x", "y.y", "z.y", "z.z"}));
}

TEST(NormalForm, SquareOfSumVanishes) {
  auto rs = complete_to_degree(S(1, 1, 1), 4);
  auto s = word_poly({0}) + word_poly({1}) + word_poly({2});
  EXPECT_TRUE(rs.normal_form(s * s).is_zero());
  EXPECT_EQ(rs.normal_form(word_poly({0})), word_poly({0}));
  EXPECT_EQ(rs.normal_words(1).size(), 3u);
  EXPECT_EQ(rs.normal_words(4).size(), 24u);
}

TEST(NormalForm, FactorizationVanishesAtCubeRoots) {
  QZeta b = w, c = w;
  auto rs = complete_to_degree(S(1, b, c), 4);
  auto l = word_poly({0}) + b * word_poly({1}) + b * c * c * word_poly({2});
  auto r = c * word_poly({0}) + c * word_poly({1}) + b * b * word_poly({2});
  EXPECT_TRUE(rs.normal_form(l * r).is_zero());
}

TEST(NormalForm, DegreeOverflowSignalsDeeperCompletion) {
  auto rs = complete_to_degree(S(1, 1, 1), 3);
  try {
    rs.normal_form(word_poly({0, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::needs_deeper_completion);
  }
  EXPECT_THROW(complete_to_degree(S(1, 1, 1), 1), Error);
}

TEST(Order, ParsesPermutations) {
  auto o = MonomialOrder::parse("z,x,y", default_names(3));
  EXPECT_EQ(o.precedence, (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(o.to_string(default_names(3)), "z,x,y");
  EXPECT_THROW(MonomialOrder::parse("x,x,y", default_names(3)), Error);
  EXPECT_THROW(MonomialOrder::parse("x,y,q", default_names(3)), Error);
  EXPECT_TRUE(o.less(make_word({2, 2}), make_word({0, 0})));
}

TEST(Order, DimensionsIndependentOfPrecedence) {
  std::vector<int> perm{0, 1, 2};
  do {
    MonomialOrder o{perm};
    EXPECT_EQ(complete_to_degree(S(1, 1, 1), o, 6).hilbert_function(6), degenerate(6));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(WeightedSum, ConstantWeightCountsNormalWords) {
  auto rs = complete_to_degree(S(1, w, w), 6);
  for (std::size_t d = 0; d <= 6; ++d) {
    QZeta s = rs.weighted_sum(d, [](std::size_t, std::size_t) { return QZeta(1); });
    EXPECT_EQ(s, QZeta(static_cast<long long>(rs.hilbert_function(6)[d])));
  }
}

TEST(Rewrite, ConfluenceAndReductionThousandCases) {
  PrimeField f(7);
  std::mt19937_64 rng(401);
  const auto names = default_names(3);
  std::uniform_int_distribution<int> rels(1, 4), letter(0, 2), len(0, 1);
  for (std::size_t i = 0; i < test::kCases; ++i) {
    std::vector<NcPoly<Fp>> relations;
    for (int r = rels(rng); r > 0; --r) {
      NcPoly<Fp> p;
      for (int t = 0; t < 3; ++t) p.add_term(make_word({letter(rng), letter(rng)}), test::random_scalar(f, rng));
      relations.push_back(p);
    }
    auto rs = complete_relations(f, names, relations, MonomialOrder::deglex(3), 4);
    ASSERT_TRUE(rs.check_confluence()) << "case " << i;
    auto p = test::random_poly(f, rng, 4);
    auto q = test::random_poly(f, rng, 4);
    auto np = rs.normal_form(p);
    ASSERT_EQ(rs.normal_form(np), np);
    ASSERT_EQ(rs.normal_form(p + q), np + rs.normal_form(q));
    for (const auto& rel : relations) {
      Word u, v;
      for (int k = len(rng); k > 0; --k) u.push_back(static_cast<char>(letter(rng)));
      for (int k = len(rng); k > 0; --k) v.push_back(static_cast<char>(letter(rng)));
      auto m = NcPoly<Fp>::monomial(u, f.one()) * rel * NcPoly<Fp>::monomial(v, f.one());
      ASSERT_TRUE(rs.normal_form(m).is_zero());
    }
  }
}
