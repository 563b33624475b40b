#include <gtest/gtest.h>

#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/free_products.hpp"

namespace racg {
namespace {

TEST(FreeProducts, SystemAndCliqueStructure) {
  const auto sys = free_product_system({{2, 1}});
  EXPECT_EQ(sys.names(), (std::vector<std::string>{"a1", "a2", "b1"}));
  EXPECT_TRUE(sys.commutes(gen(0), gen(1)));
  EXPECT_FALSE(sys.commutes(gen(0), gen(2)));
  const auto cs = clique_structure(sys);
  ASSERT_TRUE(cs);
  EXPECT_EQ(cs->spec.ranks, (std::vector<unsigned>{2, 1}));
  EXPECT_FALSE(clique_structure(testing::pentagon()));
  EXPECT_THROW(validate({{3}}), InputError);
  EXPECT_THROW(validate({{2, 0}}), InputError);
  EXPECT_THROW(validate({{40, 30}}), InputError);
}

TEST(FreeProducts, MuK) {
  const auto m = mu_k(3, Rational(2));
  ASSERT_EQ(m.atoms.size(), 8U);
  EXPECT_EQ(m.total(), 1);
  EXPECT_EQ(m.atoms[0].mass, Rational(1, 27));
  EXPECT_EQ(m.atoms[7].mass, Rational(8, 27));
  EXPECT_THROW(mu_k(0, 1), InputError);
  EXPECT_THROW(mu_k(2, 0), InputError);
}

TEST(FreeProducts, IdempotentIdentities) {
  for (const auto& sys : {CoxeterSystem::from_names({"s"}, {}), testing::pentagon()}) {
    const auto c = check_idempotents(sys, hvn_z2_idempotents(sys, gen(0)));
    EXPECT_TRUE(c.all());
  }
}

TEST(FreeProducts, FoldMatchesDirectProductRule) {
  testing::Gen g(41);
  const std::vector<std::vector<unsigned>> specs{{2, 1}, {2, 2}, {3, 1}, {1, 3}, {2, 2, 1}, {3, 2, 2}};
  for (const auto& ranks : specs)
    for (int i = 0; i < 12; ++i) {
      const FreeFactorSpec spec{ranks};
      const Rational q = g.rational(20, 8);
      const auto report = dykema_decompose(spec, q);
      const auto direct = testing::direct_atoms(spec, q);
      ASSERT_EQ(report.atoms.atoms.size(), direct.size());
      for (std::size_t k = 0; k < direct.size(); ++k) {
        EXPECT_EQ(report.atoms.atoms[k].subsets, direct[k].first);
        EXPECT_EQ(report.atoms.atoms[k].mass, direct[k].second);
      }
      EXPECT_EQ(report.diffuse, report.atoms.total() < 1);
    }
}

TEST(FreeProducts, Worked21Example) {
  const auto r = dykema_decompose({{2, 1}}, 3);
  ASSERT_EQ(r.atoms.atoms.size(), 1U);
  EXPECT_EQ(r.atoms.atoms[0].subsets, (std::vector<std::uint64_t>{3, 1}));
  EXPECT_EQ(r.atoms.atoms[0].mass, Rational(5, 16));
  EXPECT_TRUE(r.diffuse);
  EXPECT_TRUE(dykema_decompose({{2, 1}}, 1).atoms.atoms.empty());
  EXPECT_THROW(dykema_decompose({{1, 1, 1}}, 2), PreconditionError);
  const auto reordered = dykema_decompose({{1, 2}}, 3);
  EXPECT_EQ(reordered.order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(reordered.atoms.atoms[0].subsets, (std::vector<std::uint64_t>{1, 3}));
}

TEST(FreeProducts, ClosedFormAgreesWithRadius) {
  testing::Gen g(42);
  for (const auto& ranks : std::vector<std::vector<unsigned>>{{2, 1}, {2, 2}, {3, 1}, {1, 1, 1}, {2, 1, 1}})
    for (int i = 0; i < 10; ++i) {
      const auto cv = cross_validate_with_rho({ranks}, g.rational(30, 10));
      EXPECT_TRUE(cv.agree);
    }
  EXPECT_TRUE(closed_form_condition({{2, 1}}, 3));
  EXPECT_FALSE(closed_form_condition({{2, 1}}, 1));
  EXPECT_EQ(closed_form_condition({{2, 1}}, Rational(1, 3)), closed_form_condition({{2, 1}}, 3));
}

TEST(FreeProducts, Freeness) {
  const auto z = testing::z2sq_free_z2();
  const auto r = freeness_test(z, {GeneratorSet::of(gen(0)), GeneratorSet::of({gen(1), gen(2)})}, 6);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.sequences, 50U);
  EXPECT_THROW(freeness_test(z, {GeneratorSet::of({gen(0), gen(1)}), GeneratorSet::of(gen(2))}, 4), InputError);
  EXPECT_THROW(freeness_test(z, {GeneratorSet::of(gen(0)), GeneratorSet::of(gen(1))}, 4), InputError);
}

}  // namespace
}  // namespace racg
