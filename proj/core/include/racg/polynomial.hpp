#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "racg/laurent.hpp"

namespace racg {

/// Dense polynomial over Q in ascending degree; trailing zeros are trimmed.
using QPoly = std::vector<Rational>;
/// Dense polynomial over Z in ascending degree.
using IntPoly = std::vector<mpz_class>;

namespace poly {

QPoly trim(QPoly p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly pow(const QPoly& a, std::size_t n);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly& p);
/// p divided by gcd(p, p'), keeping each distinct root once.
QPoly square_free(const QPoly& p);

Rational evaluate(const QPoly& p, const Rational& x);
double evaluate(const QPoly& p, double x);

/// Number of distinct real roots of a square-free p in (a, b], by Sturm's theorem.
std::size_t count_roots(const QPoly& square_free_p, const Rational& a, const Rational& b);

/// First `n` Taylor coefficients of num/den at 0; requires den(0) != 0.
QPoly taylor(const QPoly& num, const QPoly& den, std::size_t n);

QPoly from_int(const IntPoly& p);
/// Requires integer coefficients.
IntPoly to_int(const QPoly& p);

/// Ascending-degree text in t, e.g. "1 + t - 2*t^2".
std::string format(const IntPoly& p, const char* var = "t");

}  // namespace poly

}  // namespace racg
