#include "racg/hecke_expr.hpp"

#include <cctype>
#include <sstream>

#include "racg/error.hpp"

namespace racg {

namespace {

// Scalars stay parameter-free until they meet an algebra element, so that
// "2*j(T(s))" works in the dual algebra.
struct Value {
  bool scalar = true;
  LaurentPoly c;
  ExactHecke h;
};

class Parser {
 public:
  Parser(const CoxeterSystem& sys, std::string_view text) : sys_(sys), text_(text) {}

  ExactHecke run() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return to_element(v, ExactParam{});
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("Hecke expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  ExactHecke to_element(const Value& v, const ExactParam& param) const {
    if (!v.scalar) return v.h;
    return unit(sys_, param) * v.c;
  }

  Value combine_add(Value a, const Value& b, bool subtract) {
    if (a.scalar && b.scalar) {
      a.c = subtract ? a.c - b.c : a.c + b.c;
      return a;
    }
    const ExactParam param = a.scalar ? b.h.param() : a.h.param();
    ExactHecke x = to_element(a, param);
    const ExactHecke y = to_element(b, param);
    try {
      x = subtract ? x - y : x + y;
    } catch (const InputError&) {
      fail("cannot add elements of the algebras with parameters q and 1/q");
    }
    return Value{false, {}, std::move(x)};
  }

  Value combine_mul(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return Value{true, a.c * b.c, {}};
    if (a.scalar) return Value{false, {}, b.h * a.c};
    if (b.scalar) return Value{false, {}, a.h * b.c};
    try {
      return Value{false, {}, mul(sys_, a.h, b.h)};
    } catch (const InputError&) {
      fail("cannot multiply elements of the algebras with parameters q and 1/q");
    }
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = combine_add(std::move(v), term(), false);
      else if (accept('-'))
        v = combine_add(std::move(v), term(), true);
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (accept('*')) v = combine_mul(v, unary());
    return v;
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      if (v.scalar)
        v.c = -v.c;
      else
        v.h *= LaurentPoly(-1);
      return v;
    }
    return power();
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    return std::stol(digits);
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const long k = integer();
    if (k < 0) {
      if (!base.scalar || base.c.terms().size() != 1) fail("negative powers need a scalar monomial such as u");
      const auto& [e, c] = *base.c.terms().begin();
      Rational inv = 1 / c;
      LaurentPoly m = LaurentPoly::monomial(1, 0);
      for (long i = 0; i < -k; ++i) m *= LaurentPoly::monomial(inv, -e);
      return Value{true, m, {}};
    }
    Value out{true, LaurentPoly(1), {}};
    for (long i = 0; i < k; ++i) out = combine_mul(out, base);
    return out;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Value{true, LaurentPoly(number()), {}};
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept_keyword("star")) {
      expect('(');
      Value v = expr();
      expect(')');
      if (!v.scalar) v.h = star(sys_, v.h);
      return v;
    }
    if (accept_keyword("j")) {
      expect('(');
      Value v = expr();
      expect(')');
      if (!v.scalar) v.h = j_iso(v.h);
      return v;
    }
    if (accept_keyword("u")) return Value{true, LaurentPoly::u(), {}};
    if (accept_keyword("p")) return Value{true, LaurentPoly::p(), {}};
    if (accept_keyword("T")) {
      expect('(');
      const std::size_t start = pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("missing ')' after word");
      Word w;
      try {
        w = parse_word(sys_, text_.substr(start, close - start));
      } catch (const InputError& e) {
        fail(e.what());
      }
      pos_ = close + 1;
      return Value{false, {}, t_basis(sys_, normalize(sys_, w), ExactParam{})};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const InputError&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  const CoxeterSystem& sys_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string coefficient_text(const LaurentPoly& c, bool& negative) {
  negative = false;
  if (c.terms().size() == 1) {
    const auto& [k, r] = *c.terms().begin();
    negative = r < 0;
    LaurentPoly abs = negative ? -c : c;
    return abs == LaurentPoly(1) ? "" : abs.to_string();
  }
  return "(" + c.to_string() + ")";
}

std::string coefficient_text(double c, bool& negative) {
  negative = c < 0;
  const double a = negative ? -c : c;
  if (a == 1.0) return "";
  std::ostringstream os;
  os.precision(17);
  os << a;
  return os.str();
}

template <class Coeff>
std::string format_terms(const CoxeterSystem& sys, const HeckeElement<Coeff>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    bool negative = false;
    const std::string coeff = coefficient_text(c, negative);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (!coeff.empty()) out += coeff + "*";
    out += "T(" + format_element(sys, w) + ")";
  }
  return out;
}

}  // namespace

ExactHecke parse_hecke(const CoxeterSystem& sys, std::string_view text) { return Parser(sys, text).run(); }

std::string format_hecke(const CoxeterSystem& sys, const ExactHecke& a) { return format_terms(sys, a); }

std::string format_hecke(const CoxeterSystem& sys, const NumericHecke& a) { return format_terms(sys, a); }

}  // namespace racg
