#include <gtest/gtest.h>

#include "oracles.hpp"
#include "racg/ball.hpp"
#include "racg/coxeter.hpp"
#include "racg/error.hpp"

namespace racg {
namespace {

using testing::Gen;
using testing::TitsRep;

std::vector<Word> all_words(const CoxeterSystem& sys, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t n = 1; n <= max_len; ++n) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        Word w = out[i];
        w.push_back(gen(s));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<CoxeterSystem> systems() { return {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()}; }

TEST(CoxeterSystem, RejectsMalformedInput) {
  EXPECT_THROW(CoxeterSystem::from_names({"s", "s"}, {}), InputError);
  EXPECT_THROW(CoxeterSystem::from_names({"s", "t"}, {{"s", "s"}}), InputError);
  EXPECT_THROW(CoxeterSystem::from_names({"s", "t"}, {{"s", "t"}, {"t", "s"}}), InputError);
  EXPECT_THROW(CoxeterSystem::from_names({"s", "t"}, {{"s", "x"}}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("g" + std::to_string(i));
  EXPECT_THROW(CoxeterSystem::from_names(many, {}), InputError);
}

TEST(CoxeterSystem, ComponentsAndFiniteness) {
  const auto z = testing::z2sq_free_z2();
  EXPECT_TRUE(z.irreducible());
  EXPECT_FALSE(z.finite());
  EXPECT_EQ(z.free_factor_generator(), gen(0));
  EXPECT_EQ(z.centralizer(gen(1)), GeneratorSet::of({gen(1), gen(2)}));

  const auto square = CoxeterSystem::from_names({"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(square.finite());
  EXPECT_EQ(square.components().size(), 2U);

  const auto prod = CoxeterSystem::from_names({"s", "t", "u", "r"}, {{"s", "r"}, {"t", "r"}, {"u", "r"}});
  EXPECT_FALSE(prod.irreducible());
  ASSERT_EQ(prod.components().size(), 2U);
  EXPECT_EQ(prod.components()[0], GeneratorSet::of({gen(0), gen(1), gen(2)}));
  EXPECT_FALSE(testing::pentagon().free_factor_generator());
}

TEST(NormalForm, MatchesRewritingOracle) {
  for (const auto& sys : systems()) {
    const std::size_t len = sys.rank() == 3 ? 7 : 5;
    for (const Word& w : all_words(sys, len))
      ASSERT_EQ(normalize(sys, w).word(), testing::rewriting_normal_form(sys, w)) << format_word(sys, w);
  }
}

TEST(NormalForm, ReducednessAgreesWithTitsRepresentation) {
  for (const auto& sys : systems()) {
    const TitsRep rep(sys);
    const std::size_t len = sys.rank() == 3 ? 8 : 6;
    for (const Word& w : all_words(sys, len)) {
      ASSERT_EQ(is_reduced(sys, w), rep.reduced(w)) << format_word(sys, w);
      const Element e = normalize(sys, w);
      ASSERT_EQ(rep.of_word(e.word()), rep.of_word(w));
      ASSERT_TRUE(rep.reduced(e.word()));
    }
  }
}

TEST(NormalForm, LexNormalFormOfReducedWords) {
  Gen g(11);
  for (const auto& sys : systems())
    for (int i = 0; i < 300; ++i) {
      const Element e = g.element(sys, 12);
      Word shuffled = e.word();
      for (int k = 0; k < 20 && shuffled.size() > 1; ++k) {
        const std::size_t j = g.below(shuffled.size() - 1);
        if (sys.commutes(shuffled[j], shuffled[j + 1])) std::swap(shuffled[j], shuffled[j + 1]);
      }
      EXPECT_EQ(lex_normal_form(sys, shuffled), e.word());
    }
}

TEST(Elements, ProductsAndInversesMatchMatrices) {
  Gen g(12);
  for (const auto& sys : systems()) {
    const TitsRep rep(sys);
    for (int i = 0; i < 300; ++i) {
      const Element a = g.element(sys, 10), b = g.element(sys, 10);
      const Element ab = multiply(sys, a, b);
      Word concat = a.word();
      concat.insert(concat.end(), b.word().begin(), b.word().end());
      EXPECT_EQ(rep.of_word(ab.word()), rep.of_word(concat));
      const Element inv = inverse(sys, a);
      EXPECT_EQ(inv.length(), a.length());
      EXPECT_EQ(multiply(sys, a, inv), sys.identity());
    }
  }
}

TEST(Elements, GeneratorProductsReportLengthChange) {
  Gen g(13);
  for (const auto& sys : systems()) {
    const TitsRep rep(sys);
    for (int i = 0; i < 200; ++i) {
      const Element a = g.element(sys, 10);
      const GeneratorId s = gen(g.below(sys.rank()));
      const auto right = mult_gen(sys, a, s, Side::right);
      EXPECT_EQ(right.delta, rep.ascends(rep.of_word(a.word()), s) ? 1 : -1);
      EXPECT_EQ(static_cast<long>(right.element.length()) - static_cast<long>(a.length()), right.delta);
      const auto left = mult_gen(sys, a, s, Side::left);
      Word sa{s};
      sa.insert(sa.end(), a.word().begin(), a.word().end());
      EXPECT_EQ(left.element, normalize(sys, sa));
      EXPECT_EQ(static_cast<long>(left.element.length()) - static_cast<long>(a.length()), left.delta);
    }
  }
}

TEST(Elements, DescentSetsMatchRootPositivity) {
  Gen g(14);
  for (const auto& sys : systems()) {
    const TitsRep rep(sys);
    for (int i = 0; i < 200; ++i) {
      const Element a = g.element(sys, 10);
      const auto d = descent_sets(sys, a);
      const auto m = rep.of_word(a.word());
      Word rev(a.word().rbegin(), a.word().rend());
      const auto mi = rep.of_word(rev);
      for (GeneratorId s : sys.generators()) {
        EXPECT_EQ(d.right.contains(s), !rep.ascends(m, s));
        EXPECT_EQ(d.left.contains(s), !rep.ascends(mi, s));
      }
      EXPECT_EQ(d.left, left_descents(sys, a));
      EXPECT_EQ(d.right, right_descents(sys, a));
    }
  }
}

TEST(Elements, LengthAdditivityCriterionOnBalls) {
  for (const auto& sys : systems()) {
    const Ball b = ball(sys, 4);
    for (const auto& v : b.elements())
      for (const auto& w : b.elements()) {
        const bool additive = multiply(sys, v, w).length() == v.length() + w.length();
        EXPECT_EQ(additive, (right_descents(sys, v) & left_descents(sys, w)).empty());
      }
  }
}

TEST(Elements, CommutationWithGeneratorsMatchesMatrices) {
  Gen g(15);
  for (const auto& sys : systems()) {
    const TitsRep rep(sys);
    for (int i = 0; i < 200; ++i) {
      const Element a = g.element(sys, 6);
      const auto m = rep.of_word(a.word());
      for (GeneratorId r : sys.generators())
        EXPECT_EQ(commutes_with_gen(sys, a, r), rep.times_gen(m, r) == rep.gen_times(r, m));
    }
  }
}

TEST(Elements, RegularJoinIsLengthAdditive) {
  Gen g(16);
  for (const auto& sys : systems())
    for (int i = 0; i < 200; ++i) {
      const Element v = g.element(sys, 8), w = g.element(sys, 8);
      const Element u = regular_join(sys, v, w);
      EXPECT_EQ(multiply(sys, multiply(sys, v, u), w).length(), v.length() + u.length() + w.length());
    }
}

TEST(Elements, SupportAndProductOf) {
  const auto sys = testing::pentagon();
  const Element e = normalize(sys, parse_word(sys, "abca"));
  EXPECT_EQ(support(e), GeneratorSet::of({gen(0), gen(1), gen(2)}));
  EXPECT_EQ(product_of(sys, GeneratorSet::of({gen(0), gen(1)})).length(), 2U);
}

TEST(Words, ParseAndFormat) {
  const auto sys = testing::pentagon();
  EXPECT_EQ(format_word(sys, parse_word(sys, "abc")), "abc");
  EXPECT_EQ(format_word(sys, parse_word(sys, "a.b.c")), "abc");
  EXPECT_EQ(format_word(sys, Word{}), "1");
  EXPECT_TRUE(parse_word(sys, "1").empty());
  EXPECT_THROW(parse_word(sys, "abz"), InputError);

  const auto long_names = CoxeterSystem::from_names({"a1", "a2", "b1"}, {{"a1", "a2"}});
  EXPECT_EQ(format_word(long_names, parse_word(long_names, "b1.a1")), "b1.a1");
  EXPECT_THROW(parse_word(long_names, "a3"), InputError);
}

TEST(Ball, SphereCountsMatchTitsEnumeration) {
  for (const auto& sys : systems()) {
    const std::size_t radius = sys.rank() == 3 ? 9 : 6;
    const auto oracle = testing::tits_ball(sys, radius);
    EXPECT_EQ(sphere_counts(sys, radius), oracle.sphere_counts);
    const Ball b = ball(sys, radius);
    EXPECT_EQ(b.size(), oracle.length.size());
    for (std::size_t i = 1; i < b.size(); ++i) {
      const auto& x = b[i - 1];
      const auto& y = b[i];
      EXPECT_TRUE(x.length() < y.length() || (x.length() == y.length() && x.word() < y.word()));
    }
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), i);
  }
}

TEST(Ball, CapacityIsEnforced) {
  EXPECT_THROW(ball(testing::free3(), 20, 1000), CapacityError);
  EXPECT_THROW(sphere_counts(testing::free3(), 20, 1000), CapacityError);
}

TEST(Conditions, ExhaustiveShortWords) {
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2()})
    for (const Word& w : all_words(sys, 6))
      for (GeneratorId s : sys.generators())
        for (GeneratorId t : sys.generators()) ASSERT_TRUE(check_conditions(sys, w, s, t).all_hold());
}

TEST(Conditions, DeletionWitnessRemovesTwoLetters) {
  const auto sys = testing::z2sq_free_z2();
  const Word w = parse_word(sys, "tsut");
  const auto r = check_conditions(sys, w, gen(0), gen(0));
  EXPECT_FALSE(r.deletion_applicable);
  const Word bad = parse_word(sys, "tuts");
  const auto d = check_conditions(sys, bad, gen(0), gen(0));
  ASSERT_TRUE(d.deletion_applicable);
  ASSERT_TRUE(d.deletion_pair);
  EXPECT_EQ(*d.deletion_pair, std::make_pair(std::size_t{1}, std::size_t{3}));
}

}  // namespace
}  // namespace racg
