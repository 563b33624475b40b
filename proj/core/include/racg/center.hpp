#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "racg/ball.hpp"
#include "racg/cosets.hpp"
#include "racg/coxeter.hpp"
#include "racg/growth.hpp"
#include "racg/hecke.hpp"

namespace racg {

enum class Classification { factor, factor_plus_C, not_applicable };

std::string to_string(Classification c);

struct ComponentCenter {
  GeneratorSet generators;
  bool finite = false;
  double rho = 0.0;
  Classification classification = Classification::not_applicable;
  std::optional<std::uint64_t> center_dimension;
  std::string reason;  // set when not_applicable
};

struct CenterReport {
  Rational q;
  double rho = 0.0;  // +infinity for finite W
  Classification classification = Classification::not_applicable;
  std::optional<std::uint64_t> center_dimension;  // empty when unknown
  std::string reason;
  std::vector<ComponentCenter> components;
  std::map<std::string, double> residuals;
  std::vector<std::size_t> radii;
};

/// Classifies the center of N_q(W) component by component. Growth series and
/// radii are computed once at construction, so repeated queries are cheap.
class CenterAnalyzer {
 public:
  explicit CenterAnalyzer(const CoxeterSystem& sys, std::size_t cap = kDefaultBallCap);

  const CoxeterSystem& system() const { return sys_; }
  const RationalSeries& series() const { return series_; }
  const RadiusOfConvergence& radius() const { return radius_; }

  /// Throws InputError unless q > 0.
  CenterReport classify(const Rational& q) const;

 private:
  struct Component {
    GeneratorSet generators;
    std::size_t rank = 0;
    RadiusOfConvergence radius;
  };

  CoxeterSystem sys_;
  RationalSeries series_;
  RadiusOfConvergence radius_;
  std::vector<Component> components_;
};

CenterReport classify(const CoxeterSystem& sys, const Rational& q, std::size_t cap = kDefaultBallCap);

/// A function on a ball of W, indexed like the ball.
template <class Coeff>
struct BallFunction {
  std::shared_ptr<const Ball> ball;
  std::vector<Coeff> values;

  /// Value at w, or nullopt when w lies outside the ball.
  std::optional<Coeff> at(const Element& w) const {
    auto i = ball->index_of(w);
    if (!i) return std::nullopt;
    return values[*i];
  }
};

/// zeta(w) = q^{|w|/2} on the ball. Requires q <= 1 (apply j and use 1/q otherwise).
BallFunction<double> zeta_symbol(const CoxeterSystem& sys, const Rational& q, std::size_t radius,
                                 std::size_t cap = kDefaultBallCap);
/// zeta(w) = u^{|w|} with u formal.
BallFunction<LaurentPoly> zeta_symbol_exact(const CoxeterSystem& sys, std::size_t radius,
                                            std::size_t cap = kDefaultBallCap);

struct SymbolCheck {
  std::size_t checked = 0;
  std::vector<Element> witnesses;  // violating w
  bool pass() const { return witnesses.empty(); }
};

/// For each w with |sws| = |w| + 2 and sws in the ball, checks xi(sw) = xi(ws)
/// and xi(sws) = xi(w) + p xi(sw). Exact for LaurentPoly; 1e-12 relative for double.
template <class Coeff>
SymbolCheck check_symbol_commutation(const CoxeterSystem& sys, GeneratorId s, const BallFunction<Coeff>& xi,
                                     const HeckeParam<Coeff>& param);

/// Checks xi(d w0 d') = xi(w0) q^{(|d w0 d'| - |w0|)/2} on every element of the
/// double coset D w D inside the ball. Throws PreconditionError when D w D is
/// degenerate.
template <class Coeff>
SymbolCheck double_coset_symbol_check(const CoxeterSystem& sys, InfinitePair pair, const Element& w,
                                      const BallFunction<Coeff>& xi, const HeckeParam<Coeff>& param);

/// Solution of f(n+2) = p f(n+1) + f(n) along a coset, split into the modes
/// q^{n/2} and (-q^{-1/2})^n.
struct CosetRecurrence {
  double q = 1.0;
  std::vector<double> sequence;  // f(0..n)
  double alpha = 0.0;            // coefficient of q^{n/2}
  double beta = 0.0;             // coefficient of (-q^{-1/2})^n
  bool admissible = false;       // the solution is square summable
  std::string note;
};

/// Throws InputError unless q > 0.
CosetRecurrence coset_recurrence(double q, double f0, double f1, std::size_t n);

struct ProjectionReport {
  Rational q;
  std::size_t radius = 0;
  std::size_t compressed_radius = 0;  // P is compressed to the ball of this radius
  double growth_value = 0.0;          // W(q)
  bool eigen_equation_exact = false;  // T_s^r zeta = u zeta on |w| <= radius - 1, formal u
  double eigen_equation_residual = 0.0;
  double idempotence_residual = 0.0;  // ||P^2 - P||
  double tail_bound = 0.0;            // (W(q) - partial norm^2) / W(q)
  double commutator_residual = 0.0;   // max_s ||[T_s, P]|| on the interior
  double rayleigh_quotient = 0.0;     // <zeta, T(zeta) zeta> / ||zeta||^2
  double rayleigh_error = 0.0;        // |rayleigh_quotient - W(q)| / W(q)
};

/// Numerical certificate that W(q)^{-1} T(zeta) is a central projection.
/// Requires sys irreducible, infinite, |S| >= 3 and q < rho.
ProjectionReport verify_central_projection(const CoxeterSystem& sys, const Rational& q, std::size_t radius,
                                           std::size_t cap = kDefaultBallCap);

}  // namespace racg
