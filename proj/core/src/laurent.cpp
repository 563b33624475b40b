#include "racg/laurent.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "racg/error.hpp"

namespace racg {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> InputError { return InputError("cannot parse '" + s + "' as a rational number"); };
  if (s.empty()) throw bad();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      negative = num[0] == '-';
      num.erase(0, 1);
    }
    auto all_digits = [](const std::string& x) {
      return !x.empty() && x.find_first_not_of("0123456789") == std::string::npos;
    };
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const mpz_class d(den, 10);
    if (d == 0) throw bad();
    Rational r(mpz_class(num, 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  // Decimal with optional sign, fraction and exponent, converted exactly.
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const std::string exp = s.substr(i);
    if (exp.empty() || exp.find_first_not_of("+-0123456789") != std::string::npos) throw bad();
    try {
      scale += std::stol(exp);
    } catch (const std::exception&) {
      throw bad();
    }
    i = s.size();
  }
  if (i != s.size()) throw bad();
  if (std::labs(scale) > 4096) throw bad();

  mpz_class num(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational r = scale >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(const Rational& c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
  LaurentPoly out;
  out.add_term(k, c);
  return out;
}

void LaurentPoly::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
  return out;
}

double LaurentPoly::evaluate(double u) const {
  double sum = 0.0;
  for (const auto& [k, c] : terms_) sum += c.get_d() * std::pow(u, k);
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k == 1)
      mono = "u";
    else if (k != 0)
      mono = "u^" + std::to_string(k);
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace racg
