#include "racg/polynomial.hpp"

#include <algorithm>

#include "racg/error.hpp"

namespace racg::poly {

QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const QPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

QPoly sub(const QPoly& a, const QPoly& b) { return add(a, scale(b, -1)); }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

QPoly scale(const QPoly& a, const Rational& c) {
  QPoly out(a);
  for (auto& x : out) x *= c;
  return trim(std::move(out));
}

QPoly pow(const QPoly& a, std::size_t n) {
  QPoly out{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  const int db = degree(b);
  if (db < 0) throw InputError("polynomial division by zero");
  QPoly rem = trim(a);
  QPoly quot;
  const Rational lead = b[static_cast<std::size_t>(db)];
  while (degree(rem) >= db) {
    const int dr = degree(rem);
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    const Rational c = rem[static_cast<std::size_t>(dr)] / lead;
    if (quot.size() <= shift) quot.resize(shift + 1);
    quot[shift] += c;
    for (int i = 0; i <= db; ++i) rem[shift + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quot)), rem};
}

QPoly gcd(QPoly a, QPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, Rational(1) / a.back());
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  return trim(std::move(out));
}

QPoly square_free(const QPoly& p) {
  const QPoly g = gcd(p, derivative(p));
  if (degree(g) <= 0) return trim(p);
  return divmod(p, g).first;
}

Rational evaluate(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

double evaluate(const QPoly& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
  return acc;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{trim(p), derivative(p)};
  while (degree(chain.back()) > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

std::size_t sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(evaluate(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const QPoly& square_free_p, const Rational& a, const Rational& b) {
  if (degree(square_free_p) <= 0 || b <= a) return 0;
  const auto chain = sturm_chain(square_free_p);
  const std::size_t va = sign_changes(chain, a);
  const std::size_t vb = sign_changes(chain, b);
  return va >= vb ? va - vb : 0;
}

QPoly taylor(const QPoly& num, const QPoly& den, std::size_t n) {
  if (den.empty() || den[0] == 0) throw InputError("taylor expansion needs den(0) != 0");
  QPoly out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

QPoly from_int(const IntPoly& p) {
  QPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return trim(std::move(out));
}

IntPoly to_int(const QPoly& p) {
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (c.get_den() != 1) throw InternalError("polynomial coefficient " + c.get_str() + " is not an integer");
    out.push_back(c.get_num());
  }
  return out;
}

std::string format(const IntPoly& p, const char* var) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_class c = p[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return first ? "0" : out;
}

}  // namespace racg::poly
