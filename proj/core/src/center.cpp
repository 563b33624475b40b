#include "racg/center.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "racg/error.hpp"

namespace racg {

namespace {

bool same_value(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }
bool same_value(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<RadiusOfConvergence> component_radii(const CoxeterSystem& sys, std::size_t cap) {
  std::vector<RadiusOfConvergence> out;
  for (GeneratorSet c : sys.components()) out.emplace_back(growth_series(sys.restrict_to(c), cap));
  return out;
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::factor:
      return "factor";
    case Classification::factor_plus_C:
      return "factor_plus_C";
    case Classification::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

CenterAnalyzer::CenterAnalyzer(const CoxeterSystem& sys, std::size_t cap)
    : sys_(sys), series_(growth_series(sys, cap)), radius_(series_) {
  auto radii = component_radii(sys, cap);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const GeneratorSet g = sys.components()[i];
    components_.push_back(Component{g, g.size(), radii[i]});
  }
}

CenterReport CenterAnalyzer::classify(const Rational& q) const {
  if (q <= 0) throw InputError("q must be positive");
  CenterReport report;
  report.q = q;
  report.rho = radius_.value();

  for (const auto& comp : components_) {
    ComponentCenter cc;
    cc.generators = comp.generators;
    cc.finite = comp.rank == 1;
    cc.rho = comp.radius.value();
    if (comp.rank == 1) {
      cc.center_dimension = 2;
      cc.reason = "finite component Z2: the algebra is commutative of dimension 2";
    } else if (comp.rank == 2) {
      cc.reason = "infinite dihedral component: the factor criterion requires |S| >= 3";
    } else if (comp.radius.in_factor_interval(q)) {
      cc.classification = Classification::factor;
      cc.center_dimension = 1;
    } else {
      cc.classification = Classification::factor_plus_C;
      cc.center_dimension = 2;
    }
    report.components.push_back(cc);
  }

  if (report.components.empty()) {
    report.classification = Classification::factor;
    report.center_dimension = 1;
    return report;
  }
  if (report.components.size() == 1) {
    const auto& only = report.components.front();
    report.classification = only.classification;
    report.center_dimension = only.center_dimension;
    report.reason = only.reason;
    return report;
  }

  std::optional<std::uint64_t> dim = 1;
  for (const auto& c : report.components) {
    if (!c.center_dimension) {
      dim.reset();
      break;
    }
    *dim *= *c.center_dimension;
  }
  report.center_dimension = dim;
  if (dim && *dim == 1) {
    report.classification = Classification::factor;
  } else {
    report.reason = "reducible system: the center is the tensor product of the component centers (dimension " +
                    (dim ? std::to_string(*dim) : std::string("unknown")) + ")";
  }
  return report;
}

CenterReport classify(const CoxeterSystem& sys, const Rational& q, std::size_t cap) {
  return CenterAnalyzer(sys, cap).classify(q);
}

BallFunction<double> zeta_symbol(const CoxeterSystem& sys, const Rational& q, std::size_t radius, std::size_t cap) {
  if (q <= 0) throw InputError("q must be positive");
  if (q > 1) throw PreconditionError("zeta needs q <= 1; apply j and use 1/q instead");
  BallFunction<double> out;
  out.ball = std::make_shared<const Ball>(ball(sys, radius, cap));
  const double root = std::sqrt(q.get_d());
  out.values.reserve(out.ball->size());
  for (const auto& w : out.ball->elements()) out.values.push_back(std::pow(root, static_cast<double>(w.length())));
  return out;
}

BallFunction<LaurentPoly> zeta_symbol_exact(const CoxeterSystem& sys, std::size_t radius, std::size_t cap) {
  BallFunction<LaurentPoly> out;
  out.ball = std::make_shared<const Ball>(ball(sys, radius, cap));
  out.values.reserve(out.ball->size());
  for (const auto& w : out.ball->elements())
    out.values.push_back(LaurentPoly::monomial(1, static_cast<int>(w.length())));
  return out;
}

template <class Coeff>
SymbolCheck check_symbol_commutation(const CoxeterSystem& sys, GeneratorId s, const BallFunction<Coeff>& xi,
                                     const HeckeParam<Coeff>& param) {
  sys.check(s);
  const Coeff p = structure_constant(param);
  SymbolCheck out;
  for (std::size_t i = 0; i < xi.ball->size(); ++i) {
    const Element& w = (*xi.ball)[i];
    const auto sw = mult_gen(sys, w, s, Side::left);
    if (sw.delta < 0) continue;
    const auto sws = mult_gen(sys, sw.element, s, Side::right);
    if (sws.delta < 0) continue;
    const auto x_sws = xi.at(sws.element);
    if (!x_sws) continue;
    const Element ws = mult_gen(sys, w, s, Side::right).element;
    const Coeff x_sw = *xi.at(sw.element);
    ++out.checked;
    if (!same_value(x_sw, *xi.at(ws)) || !same_value(*x_sws, xi.values[i] + p * x_sw)) out.witnesses.push_back(w);
  }
  return out;
}

template <class Coeff>
SymbolCheck double_coset_symbol_check(const CoxeterSystem& sys, InfinitePair pair, const Element& w,
                                      const BallFunction<Coeff>& xi, const HeckeParam<Coeff>& param) {
  const DoubleCosetInfo info = shortest_rep(sys, pair, w);
  if (!info.nondegenerate)
    throw PreconditionError("the double coset of " + format_element(sys, w) +
                            " is degenerate: its shortest element commutes with both generators of the pair");
  const std::size_t radius = xi.ball->radius();
  const std::size_t w0_len = info.w0.length();
  SymbolCheck out;
  if (w0_len > radius) return out;
  const Coeff base = *xi.at(info.w0);

  // |d w0 d'| >= |d| + |w0| + |d'| - 2 for the shortest representative w0.
  const std::size_t budget = radius - w0_len + 2;
  const auto ds = dihedral_elements(sys, pair, budget);
  std::set<Element> seen, bad;
  for (const auto& d : ds) {
    const Element left = multiply(sys, d, info.w0);
    for (const auto& d2 : ds) {
      if (d.length() + d2.length() > budget) break;
      Element x = multiply(sys, left, d2);
      if (x.length() > radius || !seen.insert(x).second) continue;
      ++out.checked;
      const Coeff expected = base * sqrt_q_pow(param, static_cast<int>(x.length() - w0_len));
      if (!same_value(*xi.at(x), expected)) bad.insert(std::move(x));
    }
  }
  out.witnesses.assign(bad.begin(), bad.end());
  return out;
}

template SymbolCheck check_symbol_commutation(const CoxeterSystem&, GeneratorId, const BallFunction<LaurentPoly>&,
                                              const ExactParam&);
template SymbolCheck check_symbol_commutation(const CoxeterSystem&, GeneratorId, const BallFunction<double>&,
                                              const NumericParam&);
template SymbolCheck double_coset_symbol_check(const CoxeterSystem&, InfinitePair, const Element&,
                                               const BallFunction<LaurentPoly>&, const ExactParam&);
template SymbolCheck double_coset_symbol_check(const CoxeterSystem&, InfinitePair, const Element&,
                                               const BallFunction<double>&, const NumericParam&);

CosetRecurrence coset_recurrence(double q, double f0, double f1, std::size_t n) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InputError("q must be a positive real number");
  CosetRecurrence out;
  out.q = q;
  const double root = std::sqrt(q);
  const double p = (q - 1.0) / root;
  out.sequence.reserve(n + 1);
  out.sequence.push_back(f0);
  if (n >= 1) out.sequence.push_back(f1);
  for (std::size_t k = 2; k <= n; ++k) out.sequence.push_back(p * out.sequence[k - 1] + out.sequence[k - 2]);

  // f(n) = alpha root^n + beta (-1/root)^n; the modes are distinct for every q > 0.
  out.alpha = (f1 + f0 / root) / (root + 1.0 / root);
  out.beta = f0 - out.alpha;
  const double tol = 1e-12 * std::max({1.0, std::abs(f0), std::abs(f1)});
  const bool alpha_zero = std::abs(out.alpha) <= tol;
  const bool beta_zero = std::abs(out.beta) <= tol;
  if (q < 1.0) {
    out.admissible = beta_zero;
    out.note = "q < 1: only the mode q^{n/2} is square summable, so beta must vanish";
  } else if (q > 1.0) {
    out.admissible = alpha_zero;
    out.note = "q > 1: only the mode (-q^{-1/2})^n is square summable, so alpha must vanish";
  } else {
    out.admissible = alpha_zero && beta_zero;
    out.note = "q = 1: the modes are 1 and (-1)^n, neither square summable";
  }
  return out;
}

ProjectionReport verify_central_projection(const CoxeterSystem& sys, const Rational& q, std::size_t radius,
                                           std::size_t cap) {
  if (q <= 0) throw InputError("q must be positive");
  if (!sys.irreducible()) throw DomainError("central projection check requires an irreducible system");
  if (sys.finite()) throw DomainError("central projection check requires an infinite group");
  if (sys.rank() < 3) throw DomainError("central projection check requires |S| >= 3");
  if (radius < 2) throw InputError("central projection check needs radius >= 2");
  const RationalSeries series = growth_series(sys, cap);
  const RadiusOfConvergence rad(series);
  if (rad.at_most(q))
    throw PreconditionError("q >= rho: no central projection exists, zeta is not square summable");

  ProjectionReport report;
  report.q = q;
  report.radius = radius;
  report.compressed_radius = radius / 2;
  const double qd = q.get_d();
  const double root = std::sqrt(qd);
  const double w_q = series.evaluate(q).get_d();
  report.growth_value = w_q;

  const Ball big = ball(sys, radius, cap);
  const std::size_t n = big.size();
  const std::size_t interior = big.prefix_size(radius - 1);

  // (a) right eigen-equation, exact in the formal variable u.
  ExactHecke zeta_exact(sys.tag(), ExactParam{});
  for (const auto& w : big.elements()) zeta_exact.add_term(w, LaurentPoly::monomial(1, static_cast<int>(w.length())));
  report.eigen_equation_exact = true;
  for (GeneratorId s : sys.generators()) {
    const ExactHecke image = right_gen(sys, zeta_exact, s);
    for (std::size_t i = 0; i < interior && report.eigen_equation_exact; ++i) {
      const Element& v = big[i];
      if (!(image.coefficient(v) == LaurentPoly::monomial(1, static_cast<int>(v.length()) + 1)))
        report.eigen_equation_exact = false;
    }
  }

  const NumericParam np = numeric_param(qd);
  Eigen::VectorXd zeta(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) zeta(static_cast<Eigen::Index>(i)) = std::pow(root, static_cast<double>(big[i].length()));

  std::vector<Eigen::SparseMatrix<double>> right_ops;
  for (GeneratorId s : sys.generators()) {
    right_ops.push_back(action_matrix(sys, t_basis(sys, sys.generator(s), np), big, Side::right).matrix);
    const Eigen::VectorXd image = right_ops.back() * zeta;
    for (std::size_t i = 0; i < interior; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      report.eigen_equation_residual = std::max(report.eigen_equation_residual, std::abs(image(k) - root * zeta(k)));
    }
  }

  // (b) compress T(zeta) to the ball of radius c. Column w is zeta T_w, computed
  // by right multiplications along the word of w; rows |v| <= radius - |w| are exact.
  const std::size_t c = report.compressed_radius;
  const auto nc = static_cast<Eigen::Index>(big.prefix_size(c));
  Eigen::MatrixXd m(nc, nc);
  for (Eigen::Index j = 0; j < nc; ++j) {
    Eigen::VectorXd col = zeta;
    for (GeneratorId g : big[static_cast<std::size_t>(j)].word()) col = right_ops[g.index] * col;
    m.col(j) = col.head(nc);
  }
  Eigen::MatrixXd proj = m / w_q;
  proj = 0.5 * (proj + proj.transpose()).eval();
  const Eigen::MatrixXd defect = proj * proj - proj;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(defect, Eigen::EigenvaluesOnly);
  report.idempotence_residual = eig.eigenvalues().cwiseAbs().maxCoeff();

  const Eigen::VectorXd zc = zeta.head(nc);
  const double partial = zc.squaredNorm();
  report.tail_bound = (w_q - partial) / w_q;

  // (c) commutators with the left generators on the ball of radius c - 1.
  const Ball small = ball(sys, c, cap);
  const auto inner_n = static_cast<Eigen::Index>(c == 0 ? 0 : small.prefix_size(c - 1));
  for (GeneratorId s : sys.generators()) {
    const Eigen::MatrixXd left =
        Eigen::MatrixXd(action_matrix(sys, t_basis(sys, sys.generator(s), np), small, Side::left).matrix);
    const Eigen::MatrixXd comm = left * proj - proj * left;
    report.commutator_residual =
        std::max(report.commutator_residual, spectral_norm(comm.topLeftCorner(inner_n, inner_n)));
  }

  // (d) Rayleigh quotient of the compression on zeta.
  report.rayleigh_quotient = zc.dot(m * zc) / partial;
  report.rayleigh_error = std::abs(report.rayleigh_quotient - w_q) / w_q;
  return report;
}

}  // namespace racg
