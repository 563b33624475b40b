#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "racg/center.hpp"
#include "racg/error.hpp"

namespace racg {
namespace {

TEST(Classify, FreeProductInterval) {
  const CenterAnalyzer a(testing::free3());
  EXPECT_EQ(a.classify(Rational(1, 3)).classification, Classification::factor_plus_C);
  EXPECT_EQ(a.classify(Rational(1, 3)).center_dimension, 2U);
  EXPECT_EQ(a.classify(Rational(1, 2)).classification, Classification::factor);
  EXPECT_EQ(a.classify(1).classification, Classification::factor);
  EXPECT_EQ(a.classify(2).classification, Classification::factor);
  EXPECT_EQ(a.classify(Rational(201, 100)).classification, Classification::factor_plus_C);
  EXPECT_EQ(a.classify(2).center_dimension, 1U);
  EXPECT_THROW(a.classify(0), InputError);
  EXPECT_THROW(a.classify(-1), InputError);
  EXPECT_EQ(to_string(Classification::factor_plus_C), "factor_plus_C");
}

TEST(Classify, DualityOnRandomRationals) {
  testing::Gen g(31);
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()}) {
    const CenterAnalyzer a(sys);
    for (int i = 0; i < 30; ++i) {
      const Rational q = g.rational(60, 60);
      EXPECT_EQ(a.classify(q).classification, a.classify(1 / q).classification);
    }
  }
}

TEST(Classify, SmallAndReducibleSystems) {
  const auto z2 = CoxeterSystem::from_names({"s"}, {});
  const auto r = classify(z2, 2);
  EXPECT_EQ(r.classification, Classification::not_applicable);
  EXPECT_EQ(r.center_dimension, 2U);
  EXPECT_TRUE(std::isinf(r.rho));

  const auto dihedral = classify(CoxeterSystem::from_names({"s", "t"}, {}), 2);
  EXPECT_EQ(dihedral.classification, Classification::not_applicable);
  EXPECT_FALSE(dihedral.center_dimension);
  EXPECT_NE(dihedral.reason.find("|S| >= 3"), std::string::npos);

  const auto prod = CoxeterSystem::from_names({"s", "t", "u", "r"}, {{"s", "r"}, {"t", "r"}, {"u", "r"}});
  const auto inside = classify(prod, 1);
  EXPECT_EQ(inside.classification, Classification::not_applicable);
  EXPECT_EQ(inside.center_dimension, 2U);
  ASSERT_EQ(inside.components.size(), 2U);
  EXPECT_EQ(inside.components[0].classification, Classification::factor);
  EXPECT_EQ(classify(prod, 5).center_dimension, 4U);
  EXPECT_NE(inside.reason.find("reducible"), std::string::npos);

  EXPECT_THROW(CoxeterSystem(std::vector<std::string>{}, {}), InputError);
}

TEST(Symbols, ZetaSatisfiesCommutationIdentities) {
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()}) {
    const auto zeta = zeta_symbol_exact(sys, 6);
    for (GeneratorId s : sys.generators()) {
      const auto r = check_symbol_commutation(sys, s, zeta, ExactParam{});
      EXPECT_TRUE(r.pass());
      EXPECT_GT(r.checked, 0U);
    }
    const auto numeric = zeta_symbol(sys, Rational(1, 7), 6);
    for (GeneratorId s : sys.generators())
      EXPECT_TRUE(check_symbol_commutation(sys, s, numeric, numeric_param(1.0 / 7)).pass());
  }
}

TEST(Symbols, OtherRadialModePassesCommutationButNotCosets) {
  const auto sys = testing::pentagon();
  auto other = zeta_symbol_exact(sys, 5);
  for (std::size_t i = 0; i < other.values.size(); ++i) {
    const auto len = static_cast<int>((*other.ball)[i].length());
    other.values[i] = LaurentPoly::monomial(len % 2 == 0 ? 1 : -1, -len);
  }
  for (GeneratorId s : sys.generators()) EXPECT_TRUE(check_symbol_commutation(sys, s, other, ExactParam{}).pass());
  const InfinitePair pair = infinite_pairs(sys)[0];
  EXPECT_FALSE(double_coset_symbol_check(sys, pair, sys.generator(gen(3)), other, ExactParam{}).pass());
}

TEST(Symbols, PlantedDefectIsFound) {
  const auto sys = testing::z2sq_free_z2();
  auto xi = zeta_symbol_exact(sys, 6);
  const Element bad = normalize(sys, parse_word(sys, "stu"));
  xi.values[*xi.ball->index_of(bad)] += LaurentPoly(1);
  bool found = false;
  for (GeneratorId s : sys.generators()) {
    const auto r = check_symbol_commutation(sys, s, xi, ExactParam{});
    found = found || !r.pass();
  }
  EXPECT_TRUE(found);
  const auto r = double_coset_symbol_check(sys, {gen(0), gen(1)}, bad, xi, ExactParam{});
  EXPECT_FALSE(r.pass());
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), bad), r.witnesses.end());
}

TEST(Symbols, DoubleCosetChecks) {
  const auto sys = testing::pentagon();
  const auto zeta = zeta_symbol_exact(sys, 6);
  std::size_t checked = 0;
  for (const auto& pair : infinite_pairs(sys))
    for (const auto& w : zeta.ball->elements()) {
      const auto info = shortest_rep(sys, pair, w);
      if (!info.nondegenerate || info.w0 != w) continue;
      const auto r = double_coset_symbol_check(sys, pair, w, zeta, ExactParam{});
      EXPECT_TRUE(r.pass());
      checked += r.checked;
    }
  EXPECT_GT(checked, 1000U);
  EXPECT_THROW(double_coset_symbol_check(sys, {gen(0), gen(2)}, sys.identity(), zeta, ExactParam{}), PreconditionError);
  EXPECT_THROW(zeta_symbol(sys, 2, 4), PreconditionError);
}

TEST(Recurrence, AdmissibleModes) {
  const double q = 0.25;
  EXPECT_TRUE(coset_recurrence(q, 1.0, 0.5, 20).admissible);
  const auto bad = coset_recurrence(q, 1.0, 0.0, 20);
  EXPECT_FALSE(bad.admissible);
  EXPECT_TRUE(coset_recurrence(4.0, 1.0, -0.5, 20).admissible);
  EXPECT_FALSE(coset_recurrence(4.0, 1.0, 2.0, 20).admissible);
  EXPECT_FALSE(coset_recurrence(1.0, 1.0, 1.0, 20).admissible);
  EXPECT_TRUE(coset_recurrence(1.0, 0.0, 0.0, 20).admissible);
  const auto r = coset_recurrence(q, 1.0, 0.5, 10);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_NEAR(r.sequence[n], std::pow(0.5, static_cast<double>(n)), 1e-12);
  EXPECT_THROW(coset_recurrence(0.0, 1, 1, 3), InputError);
}

TEST(Projection, SmallRadiusReport) {
  const auto sys = testing::free3();
  const auto r = verify_central_projection(sys, Rational(1, 4), 6);
  EXPECT_TRUE(r.eigen_equation_exact);
  EXPECT_EQ(r.compressed_radius, 3U);
  EXPECT_NEAR(r.growth_value, 2.5, 1e-14);
  EXPECT_LT(r.idempotence_residual, r.tail_bound);
  EXPECT_LT(r.commutator_residual, 1e-10);
  EXPECT_THROW(verify_central_projection(sys, Rational(1, 2), 6), PreconditionError);
  EXPECT_THROW(verify_central_projection(sys, Rational(1, 4), 1), InputError);
  EXPECT_THROW(verify_central_projection(CoxeterSystem::from_names({"s", "t"}, {}), Rational(1, 4), 6), DomainError);
}

}  // namespace
}  // namespace racg
