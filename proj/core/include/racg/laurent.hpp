#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace racg {

using Rational = mpq_class;

/// Parses "a/b", an integer, or a decimal such as "0.25" or "1e-3" into an
/// exact rational. Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Finite sum of c_k u^k with exact rational c_k, where u stands for q^{1/2}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)

  /// c·u^k.
  static LaurentPoly monomial(const Rational& c, int k);
  /// u.
  static LaurentPoly u() { return monomial(1, 1); }
  /// p = u - u^{-1} = (q - 1)/q^{1/2}.
  static LaurentPoly p() { return monomial(1, 1) - monomial(1, -1); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int k) const;
  /// The constant coefficient.
  Rational constant() const { return coefficient(0); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Substitutes u -> u^{-1}.
  LaurentPoly invert_variable() const;
  double evaluate(double u) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Highest exponent first, e.g. "u - u^-1", "3/2*u^2 + 1".
  std::string to_string() const;

 private:
  void add_term(int k, const Rational& c);
  std::map<int, Rational> terms_;
};

}  // namespace racg
