#include "racg/hecke.hpp"

#include <cmath>
#include <string>

#include "racg/error.hpp"

namespace racg {

namespace {

bool is_zero_coeff(const LaurentPoly& c) { return c.is_zero(); }
bool is_zero_coeff(double c) { return c == 0.0; }

}  // namespace

LaurentPoly sqrt_q_pow(const ExactParam& param, int k) { return LaurentPoly::monomial(1, param.inverted ? -k : k); }
double sqrt_q_pow(const NumericParam& param, int k) { return std::pow(param.q, 0.5 * k); }

LaurentPoly structure_constant(const ExactParam& param) {
  return param.inverted ? LaurentPoly::monomial(1, -1) - LaurentPoly::u() : LaurentPoly::p();
}

double structure_constant(const NumericParam& param) { return (param.q - 1.0) / std::sqrt(param.q); }

ExactParam dual(const ExactParam& param) { return ExactParam{!param.inverted}; }

NumericParam dual(const NumericParam& param) { return NumericParam{1.0 / param.q}; }

NumericParam numeric_param(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InputError("the Hecke parameter q must be a positive real number");
  return NumericParam{q};
}

// ---- HeckeElement ------------------------------------------------------

template <class Coeff>
Coeff HeckeElement<Coeff>::coefficient(const Element& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff{} : it->second;
}

template <class Coeff>
void HeckeElement<Coeff>::add_term(const Element& w, const Coeff& c) {
  if (is_zero_coeff(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }
}

template <class Coeff>
void HeckeElement<Coeff>::check_compatible(const HeckeElement& o) const {
  if (tag_ != o.tag_) throw InputError("Hecke elements belong to different Coxeter systems");
  if (!(param_ == o.param_)) throw InputError("Hecke elements belong to algebras with different parameters");
}

template <class Coeff>
HeckeElement<Coeff>& HeckeElement<Coeff>::operator+=(const HeckeElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

template <class Coeff>
HeckeElement<Coeff>& HeckeElement<Coeff>::operator-=(const HeckeElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, Coeff{} - c);
  return *this;
}

template <class Coeff>
HeckeElement<Coeff>& HeckeElement<Coeff>::operator*=(const Coeff& c) {
  if (is_zero_coeff(c)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = is_zero_coeff(it->second) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

// ---- operations ----------------------------------------------------------

template <class Coeff>
HeckeElement<Coeff> unit(const CoxeterSystem& sys, const HeckeParam<Coeff>& param) {
  return t_basis(sys, sys.identity(), param);
}

template <class Coeff>
HeckeElement<Coeff> t_basis(const CoxeterSystem& sys, const Element& w, const HeckeParam<Coeff>& param) {
  sys.check(w);
  HeckeElement<Coeff> out(sys.tag(), param);
  out.add_term(w, Coeff(1));
  return out;
}

template <class Coeff>
HeckeElement<Coeff> t_tilde(const CoxeterSystem& sys, const Element& w, const HeckeParam<Coeff>& param) {
  sys.check(w);
  HeckeElement<Coeff> out(sys.tag(), param);
  out.add_term(w, sqrt_q_pow(param, static_cast<int>(w.length())));
  return out;
}

template <class Coeff>
HeckeElement<Coeff> left_gen(const CoxeterSystem& sys, GeneratorId s, const HeckeElement<Coeff>& a) {
  const Coeff p = structure_constant(a.param());
  HeckeElement<Coeff> out(a.system_tag(), a.param());
  for (const auto& [w, c] : a.terms()) {
    auto [sw, delta] = mult_gen(sys, w, s, Side::left);
    out.add_term(sw, c);
    if (delta < 0) out.add_term(w, c * p);
  }
  return out;
}

template <class Coeff>
HeckeElement<Coeff> right_gen(const CoxeterSystem& sys, const HeckeElement<Coeff>& a, GeneratorId s) {
  const Coeff p = structure_constant(a.param());
  HeckeElement<Coeff> out(a.system_tag(), a.param());
  for (const auto& [w, c] : a.terms()) {
    auto [ws, delta] = mult_gen(sys, w, s, Side::right);
    out.add_term(ws, c);
    if (delta < 0) out.add_term(w, c * p);
  }
  return out;
}

template <class Coeff>
HeckeElement<Coeff> mul(const CoxeterSystem& sys, const HeckeElement<Coeff>& a, const HeckeElement<Coeff>& b) {
  a.check_compatible(b);
  if (a.system_tag() != sys.tag()) throw InputError("Hecke element does not belong to this Coxeter system");
  HeckeElement<Coeff> out(a.system_tag(), a.param());
  for (const auto& [v, cv] : a.terms()) {
    HeckeElement<Coeff> partial = b * cv;
    const auto& word = v.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) partial = left_gen(sys, *it, partial);
    out += partial;
  }
  return out;
}

template <class Coeff>
HeckeElement<Coeff> star(const CoxeterSystem& sys, const HeckeElement<Coeff>& a) {
  HeckeElement<Coeff> out(a.system_tag(), a.param());
  for (const auto& [w, c] : a.terms()) out.add_term(inverse(sys, w), c);
  return out;
}

template <class Coeff>
HeckeElement<Coeff> j_iso(const HeckeElement<Coeff>& a) {
  HeckeElement<Coeff> out(a.system_tag(), dual(a.param()));
  for (const auto& [w, c] : a.terms()) out.add_term(w, w.length() % 2 == 0 ? c : Coeff{} - c);
  return out;
}

template <class Coeff>
Coeff state_phi(const HeckeElement<Coeff>& a) {
  if (a.terms().empty()) return Coeff{};
  const auto& [w, c] = *a.terms().begin();  // ShortLex order puts the identity first
  return w.is_identity() ? c : Coeff{};
}

template <class Coeff>
Coeff inner(const HeckeElement<Coeff>& a, const HeckeElement<Coeff>& b) {
  a.check_compatible(b);
  Coeff sum{};
  for (const auto& [w, c] : a.terms()) {
    auto it = b.terms().find(w);
    if (it != b.terms().end()) sum += c * it->second;
  }
  return sum;
}

double l2_norm(const NumericHecke& a) { return std::sqrt(inner(a, a)); }

NumericHecke specialize(const ExactHecke& a, double q) {
  const NumericParam base = numeric_param(q);
  NumericHecke out(a.system_tag(), a.param().inverted ? dual(base) : base);
  const double u = std::sqrt(q);
  for (const auto& [w, c] : a.terms()) out.add_term(w, c.evaluate(u));
  return out;
}

ActionMatrix action_matrix(const CoxeterSystem& sys, const NumericHecke& a, const Ball& ball, Side side) {
  if (a.system_tag() != sys.tag()) throw InputError("Hecke element does not belong to this Coxeter system");
  const std::size_t n = ball.size();
  ActionMatrix out;
  out.exact_columns.assign(n, true);
  std::vector<Eigen::Triplet<double>> entries;
  for (std::size_t col = 0; col < n; ++col) {
    const NumericHecke basis = t_basis(sys, ball[col], a.param());
    const NumericHecke image = side == Side::left ? mul(sys, a, basis) : mul(sys, basis, a);
    for (const auto& [v, c] : image.terms()) {
      if (auto row = ball.index_of(v))
        entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), c);
      else
        out.exact_columns[col] = false;
    }
    if (out.exact_columns[col]) ++out.exact_count;
  }
  out.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  out.matrix.setFromTriplets(entries.begin(), entries.end());
  out.matrix.makeCompressed();
  return out;
}

// ---- instantiations ------------------------------------------------------

#define RACG_INSTANTIATE_HECKE(C)                                                                         \
  template class HeckeElement<C>;                                                                        \
  template HeckeElement<C> unit(const CoxeterSystem&, const HeckeParam<C>&);                             \
  template HeckeElement<C> t_basis(const CoxeterSystem&, const Element&, const HeckeParam<C>&);          \
  template HeckeElement<C> t_tilde(const CoxeterSystem&, const Element&, const HeckeParam<C>&);          \
  template HeckeElement<C> left_gen(const CoxeterSystem&, GeneratorId, const HeckeElement<C>&);          \
  template HeckeElement<C> right_gen(const CoxeterSystem&, const HeckeElement<C>&, GeneratorId);         \
  template HeckeElement<C> mul(const CoxeterSystem&, const HeckeElement<C>&, const HeckeElement<C>&);    \
  template HeckeElement<C> star(const CoxeterSystem&, const HeckeElement<C>&);                           \
  template HeckeElement<C> j_iso(const HeckeElement<C>&);                                                \
  template C state_phi(const HeckeElement<C>&);                                                          \
  template C inner(const HeckeElement<C>&, const HeckeElement<C>&);

RACG_INSTANTIATE_HECKE(LaurentPoly)
RACG_INSTANTIATE_HECKE(double)

#undef RACG_INSTANTIATE_HECKE

}  // namespace racg
