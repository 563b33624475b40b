#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/coxeter.hpp"
#include "racg/polynomial.hpp"

namespace racg {

/// W(t) = numerator / denominator with integer coefficients in ascending
/// degree, in lowest terms, denominator(0) = 1.
struct RationalSeries {
  IntPoly numerator;
  IntPoly denominator;

  /// Taylor coefficients a_0..a_n at t = 0.
  std::vector<mpz_class> taylor(std::size_t n) const;
  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  /// "(1 + t) / (1 - 2*t)".
  std::string to_string() const;
};

/// Number of cliques of each size in the commutation graph (size 0 included).
std::vector<std::uint64_t> clique_counts(const CoxeterSystem& sys);

/// The growth series from the clique polynomial of the commutation graph.
/// Construction compares the Taylor coefficients with enumerated sphere
/// counts for n <= 12 (fewer if the ball would exceed `cap`) and throws
/// InternalError on a mismatch.
RationalSeries growth_series(const CoxeterSystem& sys, std::size_t cap = kDefaultBallCap);

/// Radius of convergence of a growth series, located exactly: the smallest
/// root of the square-free denominator in (0, 1], bracketed by rationals.
class RadiusOfConvergence {
 public:
  explicit RadiusOfConvergence(const RationalSeries& series);

  /// True for finite groups (polynomial series); the radius is then +infinity.
  bool infinite() const { return infinite_; }
  double value() const;
  /// Rational bracket lo < rho <= hi, hi - lo < 1e-13 (both 0 when infinite()).
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  /// Exact comparisons for rational q > 0.
  bool at_most(const Rational& q) const;  // rho <= q
  bool equals(const Rational& q) const;
  /// q in [rho, 1/rho].
  bool in_factor_interval(const Rational& q) const;

 private:
  QPoly square_free_;
  bool infinite_ = false;
  Rational lo_, hi_;
};

double rho(const CoxeterSystem& sys, std::size_t cap = kDefaultBallCap);

/// Sum_{n <= radius} a_n q^n from sphere counts a_n.
double partial_norm2(const std::vector<std::uint64_t>& sphere_counts, double q, std::size_t radius);

}  // namespace racg
