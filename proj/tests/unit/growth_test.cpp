#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/growth.hpp"

namespace racg {
namespace {

TEST(Growth, CliqueCounts) {
  EXPECT_EQ(clique_counts(testing::free3()), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(clique_counts(testing::z2sq_free_z2()), (std::vector<std::uint64_t>{1, 3, 1}));
  EXPECT_EQ(clique_counts(testing::pentagon()), (std::vector<std::uint64_t>{1, 5, 5}));
  const auto cube = CoxeterSystem::from_names({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  EXPECT_EQ(clique_counts(cube), (std::vector<std::uint64_t>{1, 3, 3, 1}));
}

TEST(Growth, ClosedForms) {
  EXPECT_EQ(growth_series(testing::free3()).to_string(), "(1 + t) / (1 - 2*t)");
  EXPECT_EQ(growth_series(testing::z2sq_free_z2()).to_string(), "(1 + 2*t + t^2) / (1 - t - t^2)");
  EXPECT_EQ(growth_series(testing::pentagon()).to_string(), "(1 + 2*t + t^2) / (1 - 3*t + t^2)");
  EXPECT_EQ(growth_series(CoxeterSystem::from_names({"s", "t"}, {})).to_string(), "(1 + t) / (1 - t)");
  const auto finite = CoxeterSystem::from_names({"a", "b"}, {{"a", "b"}});
  const auto series = growth_series(finite);
  EXPECT_EQ(series.taylor(4), (std::vector<mpz_class>{1, 2, 1, 0, 0}));
}

TEST(Growth, TaylorCoefficientsMatchTitsSpheres) {
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()}) {
    const std::size_t n = sys.rank() == 3 ? 10 : 7;
    const auto oracle = testing::tits_ball(sys, n).sphere_counts;
    const auto taylor = growth_series(sys).taylor(n);
    ASSERT_EQ(taylor.size(), oracle.size());
    for (std::size_t i = 0; i < taylor.size(); ++i) EXPECT_EQ(taylor[i], mpz_class(oracle[i])) << i;
  }
}

TEST(Growth, Evaluation) {
  const auto series = growth_series(testing::free3());
  EXPECT_EQ(series.evaluate(Rational(1, 4)), Rational(5, 2));
  EXPECT_NEAR(series.evaluate(0.25), 2.5, 1e-15);
  EXPECT_NEAR(partial_norm2(sphere_counts(testing::free3(), 16), 0.25, 16), 2.5, 1e-4);
}

TEST(Radius, ValuesAndBrackets) {
  const double phi_inv = (std::sqrt(5.0) - 1) / 2;
  const std::vector<std::pair<CoxeterSystem, double>> cases{
      {testing::free3(), 0.5}, {testing::z2sq_free_z2(), phi_inv}, {testing::pentagon(), (3 - std::sqrt(5.0)) / 2}};
  for (const auto& [sys, expected] : cases) {
    const RadiusOfConvergence r(growth_series(sys));
    EXPECT_FALSE(r.infinite());
    EXPECT_NEAR(r.value(), expected, 1e-12);
    EXPECT_NEAR(rho(sys), expected, 1e-12);
    EXPECT_LE(r.lower(), r.upper());
    EXPECT_LT(Rational(r.upper() - r.lower()).get_d(), 1e-12);
    EXPECT_TRUE(r.at_most(r.upper()));
    EXPECT_FALSE(r.at_most(r.lower() / 2));
    EXPECT_TRUE(r.in_factor_interval(1));
    EXPECT_FALSE(r.in_factor_interval(r.lower() / 2));
  }
  const RadiusOfConvergence half(growth_series(testing::free3()));
  EXPECT_TRUE(half.equals(Rational(1, 2)));
  EXPECT_TRUE(half.in_factor_interval(Rational(1, 2)));
  EXPECT_TRUE(half.in_factor_interval(2));
  EXPECT_FALSE(half.in_factor_interval(Rational(201, 100)));
}

TEST(Radius, FiniteAndDihedral) {
  const auto finite = CoxeterSystem::from_names({"a", "b"}, {{"a", "b"}});
  const RadiusOfConvergence r(growth_series(finite));
  EXPECT_TRUE(r.infinite());
  EXPECT_TRUE(std::isinf(rho(finite)));
  EXPECT_NEAR(rho(CoxeterSystem::from_names({"s", "t"}, {})), 1.0, 1e-12);
}

}  // namespace
}  // namespace racg
