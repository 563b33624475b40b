#pragma once

#include <Eigen/SparseCore>

#include <cstdint>
#include <map>
#include <vector>

#include "racg/ball.hpp"
#include "racg/coxeter.hpp"
#include "racg/laurent.hpp"

namespace racg {

// Elements of C_q[W] in the normalized basis T_w = q^{-|w|/2} T~_w, with
// product T_s T_w = T_sw if |sw| > |w| and T_sw + p T_w otherwise.
//
// Two coefficient modes:
//  * exact:   LaurentPoly in the formal variable u = q^{1/2}; p = u - u^{-1}.
//  * numeric: double at a fixed q > 0; p = (q - 1)/sqrt(q).
// The parameter travels with every element, so the image of j (which lives
// in the algebra with q^{-1}, i.e. p -> -p) cannot be mixed with its source.

template <class Coeff>
struct HeckeParam;

template <>
struct HeckeParam<LaurentPoly> {
  bool inverted = false;  // parameter q = u^{-2} instead of u^2
  friend bool operator==(const HeckeParam&, const HeckeParam&) = default;
};

template <>
struct HeckeParam<double> {
  double q = 1.0;
  friend bool operator==(const HeckeParam&, const HeckeParam&) = default;
};

using ExactParam = HeckeParam<LaurentPoly>;
using NumericParam = HeckeParam<double>;

LaurentPoly structure_constant(const ExactParam& param);
double structure_constant(const NumericParam& param);
/// Parameter of the target algebra of j (q -> 1/q).
ExactParam dual(const ExactParam& param);
NumericParam dual(const NumericParam& param);
/// q^{k/2} in the coefficient ring of the algebra.
LaurentPoly sqrt_q_pow(const ExactParam& param, int k);
double sqrt_q_pow(const NumericParam& param, int k);
/// Throws InputError unless q > 0 and finite.
NumericParam numeric_param(double q);

template <class Coeff>
class HeckeElement {
 public:
  using Param = HeckeParam<Coeff>;
  using Terms = std::map<Element, Coeff>;

  HeckeElement() = default;
  HeckeElement(std::uint64_t system_tag, Param param) : tag_(system_tag), param_(param) {}

  std::uint64_t system_tag() const { return tag_; }
  const Param& param() const { return param_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Element& w) const;
  /// Adds c·T_w, dropping the term when the coefficient becomes zero.
  void add_term(const Element& w, const Coeff& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Coeff& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Coeff& c) { return a *= c; }
  friend HeckeElement operator*(const Coeff& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Throws InputError when systems or parameters differ.
  void check_compatible(const HeckeElement& o) const;

 private:
  std::uint64_t tag_ = 0;
  Param param_{};
  Terms terms_;
};

using ExactHecke = HeckeElement<LaurentPoly>;
using NumericHecke = HeckeElement<double>;

template <class Coeff>
HeckeElement<Coeff> unit(const CoxeterSystem& sys, const HeckeParam<Coeff>& param);

/// T_w with coefficient 1.
template <class Coeff>
HeckeElement<Coeff> t_basis(const CoxeterSystem& sys, const Element& w, const HeckeParam<Coeff>& param);

/// The unnormalized T~_w = q^{|w|/2} T_w.
template <class Coeff>
HeckeElement<Coeff> t_tilde(const CoxeterSystem& sys, const Element& w, const HeckeParam<Coeff>& param);

/// T_s · a and a · T_s.
template <class Coeff>
HeckeElement<Coeff> left_gen(const CoxeterSystem& sys, GeneratorId s, const HeckeElement<Coeff>& a);
template <class Coeff>
HeckeElement<Coeff> right_gen(const CoxeterSystem& sys, const HeckeElement<Coeff>& a, GeneratorId s);

/// Product; each basis term of `a` is applied letter by letter from the
/// right end of its canonical word.
template <class Coeff>
HeckeElement<Coeff> mul(const CoxeterSystem& sys, const HeckeElement<Coeff>& a, const HeckeElement<Coeff>& b);

/// T_w -> T_{w^{-1}}; coefficients are real so conjugation is trivial.
template <class Coeff>
HeckeElement<Coeff> star(const CoxeterSystem& sys, const HeckeElement<Coeff>& a);

/// Linear map T_w -> (-1)^{|w|} T_w into the algebra with parameter q^{-1}.
template <class Coeff>
HeckeElement<Coeff> j_iso(const HeckeElement<Coeff>& a);

/// phi(a) = <a delta_1, delta_1>, the coefficient of T_1.
template <class Coeff>
Coeff state_phi(const HeckeElement<Coeff>& a);

/// l2(W) inner product of symbols.
template <class Coeff>
Coeff inner(const HeckeElement<Coeff>& a, const HeckeElement<Coeff>& b);

double l2_norm(const NumericHecke& a);

/// Evaluates every coefficient at u = sqrt(q).
NumericHecke specialize(const ExactHecke& a, double q);

/// Matrix of the left (a·x) or right (x·a) action on the span of a ball.
/// Entry (v, w) is the coefficient of delta_v in the image of delta_w;
/// a column is exact when the full image lies inside the ball.
struct ActionMatrix {
  Eigen::SparseMatrix<double> matrix;
  std::vector<bool> exact_columns;
  std::size_t exact_count = 0;
};

ActionMatrix action_matrix(const CoxeterSystem& sys, const NumericHecke& a, const Ball& ball, Side side);

}  // namespace racg
