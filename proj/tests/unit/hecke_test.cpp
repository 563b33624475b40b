#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "racg/error.hpp"
#include "racg/hecke.hpp"
#include "racg/hecke_expr.hpp"

namespace racg {
namespace {

using testing::Gen;

const ExactParam kExact{};

ExactHecke T(const CoxeterSystem& sys, const std::string& w) {
  return t_basis(sys, normalize(sys, parse_word(sys, w)), kExact);
}

bool matches_unnormalized(const CoxeterSystem& sys, const testing::TitsRep& rep, const testing::TitsBall& tb,
                          const Element& v, const Element& w) {
  const ExactHecke got = mul(sys, t_basis(sys, v, kExact), t_basis(sys, w, kExact));
  const auto oracle = testing::unnormalized_product(sys, rep, tb, v.word(), w.word());
  if (got.size() != oracle.size()) return false;
  for (const auto& [x, c] : got.terms()) {
    auto it = oracle.find(testing::TitsRep::key(rep.of_word(x.word())));
    if (it == oracle.end()) return false;
    const int shift = static_cast<int>(x.length()) - static_cast<int>(v.length() + w.length());
    if (it->second * LaurentPoly::monomial(1, shift) != c) return false;
  }
  return true;
}

TEST(Hecke, QuadraticRelation) {
  const auto sys = testing::free3();
  const ExactHecke ts = T(sys, "s");
  EXPECT_EQ(mul(sys, ts, ts), unit(sys, kExact) + ts * LaurentPoly::p());
  EXPECT_EQ(format_hecke(sys, mul(sys, ts, ts)), "T(1) + (u - u^-1)*T(s)");
  EXPECT_EQ(mul(sys, ts, T(sys, "t")), T(sys, "st"));
}

TEST(Hecke, StructureConstants) {
  EXPECT_EQ(structure_constant(kExact), LaurentPoly::p());
  EXPECT_EQ(structure_constant(dual(kExact)), -LaurentPoly::p());
  EXPECT_NEAR(structure_constant(numeric_param(4.0)), 1.5, 1e-15);
  EXPECT_NEAR(structure_constant(dual(numeric_param(4.0))), -1.5, 1e-15);
  EXPECT_EQ(sqrt_q_pow(kExact, 3), LaurentPoly::monomial(1, 3));
  EXPECT_EQ(sqrt_q_pow(dual(kExact), 3), LaurentPoly::monomial(1, -3));
  EXPECT_THROW(numeric_param(0.0), InputError);
  EXPECT_THROW(numeric_param(-1.0), InputError);
  EXPECT_THROW(numeric_param(std::numeric_limits<double>::quiet_NaN()), InputError);
}

TEST(Hecke, ProductsMatchUnnormalizedOracle) {
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()}) {
    const testing::TitsRep rep(sys);
    const testing::TitsBall tb = testing::tits_ball(sys, 6);
    const Ball b = ball(sys, 3);
    for (const auto& v : b.elements())
      for (const auto& w : b.elements())
        ASSERT_TRUE(matches_unnormalized(sys, rep, tb, v, w)) << format_element(sys, v) << " * " << format_element(sys, w);
  }
}

TEST(Hecke, TildeBasisScaling) {
  const auto sys = testing::z2sq_free_z2();
  const Element w = normalize(sys, parse_word(sys, "stu"));
  EXPECT_EQ(t_tilde(sys, w, kExact), t_basis(sys, w, kExact) * LaurentPoly::monomial(1, 3));
  const NumericParam p = numeric_param(4.0);
  EXPECT_NEAR(t_tilde(sys, w, p).coefficient(w), 8.0, 1e-14);
}

TEST(Hecke, AlgebraIdentities) {
  Gen g(21);
  for (const auto& sys : {testing::free3(), testing::z2sq_free_z2(), testing::pentagon()})
    for (int i = 0; i < 40; ++i) {
      const ExactHecke a = g.hecke(sys, 3, 4), b = g.hecke(sys, 3, 4), c = g.hecke(sys, 2, 3);
      const ExactHecke ab = mul(sys, a, b);
      EXPECT_EQ(mul(sys, ab, c), mul(sys, a, mul(sys, b, c)));
      EXPECT_EQ(mul(sys, a, b + c), ab + mul(sys, a, c));
      EXPECT_EQ(star(sys, ab), mul(sys, star(sys, b), star(sys, a)));
      EXPECT_EQ(j_iso(ab), mul(sys, j_iso(a), j_iso(b)));
      EXPECT_EQ(j_iso(j_iso(a)), a);
      EXPECT_EQ(state_phi(ab), state_phi(mul(sys, b, a)));
      EXPECT_EQ(state_phi(mul(sys, star(sys, a), b)), inner(a, b));
    }
}

TEST(Hecke, GeneratorActionsAgreeWithProduct) {
  Gen g(22);
  const auto sys = testing::pentagon();
  for (int i = 0; i < 50; ++i) {
    const ExactHecke a = g.hecke(sys, 4, 6);
    const GeneratorId s = gen(g.below(sys.rank()));
    const ExactHecke ts = t_basis(sys, sys.generator(s), kExact);
    EXPECT_EQ(left_gen(sys, s, a), mul(sys, ts, a));
    EXPECT_EQ(right_gen(sys, a, s), mul(sys, a, ts));
  }
}

TEST(Hecke, BasisIsOrthonormal) {
  const auto sys = testing::z2sq_free_z2();
  const Ball b = ball(sys, 3);
  for (const auto& v : b.elements())
    for (const auto& w : b.elements())
      EXPECT_EQ(inner(t_basis(sys, v, kExact), t_basis(sys, w, kExact)), LaurentPoly(v == w ? 1 : 0));
}

TEST(Hecke, SpecializationCommutesWithProducts) {
  Gen g(23);
  const auto sys = testing::z2sq_free_z2();
  for (double q : {0.3, 1.0, 2.5}) {
    for (int i = 0; i < 30; ++i) {
      const ExactHecke a = g.hecke(sys, 3, 4), b = g.hecke(sys, 3, 4);
      const NumericHecke direct = mul(sys, specialize(a, q), specialize(b, q));
      const NumericHecke via = specialize(mul(sys, a, b), q);
      for (const auto* x : {&direct, &via})
        for (const auto& [w, c] : x->terms())
          EXPECT_NEAR(direct.coefficient(w), via.coefficient(w), 1e-11 * std::max(1.0, std::abs(c)));
    }
  }
  const NumericHecke n = specialize(T(sys, "st"), 2.0);
  EXPECT_NEAR(l2_norm(n + n), 2.0, 1e-15);
}

TEST(Hecke, MixingAlgebrasIsRejected) {
  const auto a = testing::free3();
  const auto b = testing::pentagon();
  EXPECT_THROW(mul(a, T(a, "s"), j_iso(T(a, "s"))), InputError);
  EXPECT_THROW(T(a, "s") + T(b, "a"), InputError);
  EXPECT_THROW(mul(a, T(a, "s"), T(b, "a")), InputError);
}

TEST(Hecke, ActionMatrixColumns) {
  const auto sys = testing::free3();
  const Ball b = ball(sys, 3);
  const NumericHecke ts = specialize(T(sys, "s"), 2.0);
  const auto left = action_matrix(sys, ts, b, Side::left);
  EXPECT_EQ(left.exact_count, b.prefix_size(2) + 4);
  const Eigen::MatrixXd dense(left.matrix);
  const double p = structure_constant(numeric_param(2.0));
  const auto s = *b.index_of(normalize(sys, parse_word(sys, "s")));
  EXPECT_NEAR(dense(0, static_cast<Eigen::Index>(s)), 1.0, 1e-15);
  EXPECT_NEAR(dense(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)), p, 1e-15);
}

TEST(HeckeExpr, ParsesAndFormats) {
  const auto sys = testing::z2sq_free_z2();
  EXPECT_EQ(parse_hecke(sys, "T(s)*T(s)"), mul(sys, T(sys, "s"), T(sys, "s")));
  EXPECT_EQ(parse_hecke(sys, "T(s)^2 - p*T(s)"), unit(sys, kExact));
  EXPECT_EQ(parse_hecke(sys, "2*T(tu) - T(ut)"), T(sys, "tu"));
  EXPECT_EQ(parse_hecke(sys, "u^-2 * (u^2 + 1)"), unit(sys, kExact) + unit(sys, kExact) * LaurentPoly::monomial(1, -2));
  EXPECT_EQ(parse_hecke(sys, "1/2 + 0.5"), unit(sys, kExact));
  EXPECT_EQ(parse_hecke(sys, "star(T(st))"), T(sys, "ts"));
  EXPECT_EQ(parse_hecke(sys, "j(T(s)) * j(T(s))"), j_iso(mul(sys, T(sys, "s"), T(sys, "s"))));
  EXPECT_EQ(format_hecke(sys, parse_hecke(sys, "0*T(s)")), "0");
  EXPECT_EQ(format_hecke(sys, parse_hecke(sys, "-T(s) + 3*u*T(t)")), "-T(s) + 3*u*T(t)");
}

TEST(HeckeExpr, ReportsErrorsWithColumn) {
  const auto sys = testing::z2sq_free_z2();
  for (const char* bad : {"T(s", "T(x)", "T(s) +", "2 ** T(s)", "T(s)^-1", "T(s) + j(T(s))", "q", ""}) {
    try {
      parse_hecke(sys, bad);
      ADD_FAILURE() << bad;
    } catch (const InputError& e) {
      EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
  }
}

}  // namespace
}  // namespace racg
