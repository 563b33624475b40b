#include "racg/growth.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "racg/error.hpp"

namespace racg {

namespace {

constexpr std::size_t kCheckedCoefficients = 12;

using CliqueMemo = std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>;

std::vector<std::uint64_t> cliques_in(const CoxeterSystem& sys, GeneratorSet mask, CliqueMemo& memo) {
  if (mask.empty()) return {1};
  if (auto it = memo.find(mask.bits()); it != memo.end()) return it->second;
  const GeneratorId v = gen(static_cast<std::size_t>(std::countr_zero(mask.bits())));
  GeneratorSet rest = mask;
  rest.erase(v);
  std::vector<std::uint64_t> out = cliques_in(sys, rest, memo);
  const std::vector<std::uint64_t> with_v = cliques_in(sys, rest & sys.centralizer(v), memo);
  if (out.size() < with_v.size() + 1) out.resize(with_v.size() + 1, 0);
  for (std::size_t k = 0; k < with_v.size(); ++k) out[k + 1] += with_v[k];
  memo.emplace(mask.bits(), out);
  return out;
}

}  // namespace

std::vector<std::uint64_t> clique_counts(const CoxeterSystem& sys) {
  CliqueMemo memo;
  return cliques_in(sys, sys.all(), memo);
}

std::vector<mpz_class> RationalSeries::taylor(std::size_t n) const {
  const QPoly coeffs = poly::taylor(poly::from_int(numerator), poly::from_int(denominator), n + 1);
  std::vector<mpz_class> out;
  out.reserve(n + 1);
  for (const auto& c : coeffs) out.push_back(c.get_num());
  return out;
}

Rational RationalSeries::evaluate(const Rational& t) const {
  return poly::evaluate(poly::from_int(numerator), t) / poly::evaluate(poly::from_int(denominator), t);
}

double RationalSeries::evaluate(double t) const {
  return poly::evaluate(poly::from_int(numerator), t) / poly::evaluate(poly::from_int(denominator), t);
}

std::string RationalSeries::to_string() const {
  return "(" + poly::format(numerator) + ") / (" + poly::format(denominator) + ")";
}

RationalSeries growth_series(const CoxeterSystem& sys, std::size_t cap) {
  const std::size_t n = sys.rank();
  const QPoly one_plus_t{Rational(1), Rational(1)};
  const QPoly minus_t{Rational(0), Rational(-1)};

  const auto cliques = clique_counts(sys);
  QPoly den;
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    if (cliques[k] == 0) continue;
    const QPoly term = poly::mul(poly::pow(minus_t, k), poly::pow(one_plus_t, n - k));
    den = poly::add(den, poly::scale(term, Rational(mpz_class(std::to_string(cliques[k]), 10))));
  }
  QPoly num = poly::pow(one_plus_t, n);

  const QPoly g = poly::gcd(num, den);
  num = poly::divmod(num, g).first;
  den = poly::divmod(den, g).first;
  const Rational d0 = den.at(0);
  num = poly::scale(num, 1 / d0);
  den = poly::scale(den, 1 / d0);

  RationalSeries series{poly::to_int(num), poly::to_int(den)};

  const auto predicted = series.taylor(kCheckedCoefficients);
  std::size_t check_to = 0;
  mpz_class running = 0;
  for (std::size_t k = 0; k <= kCheckedCoefficients; ++k) {
    running += predicted[k];
    if (running > mpz_class(std::to_string(cap), 10)) break;
    check_to = k;
  }
  const auto counts = sphere_counts(sys, check_to, cap);
  for (std::size_t k = 0; k <= check_to; ++k) {
    if (predicted[k] != mpz_class(std::to_string(counts[k]), 10))
      throw InternalError("growth series coefficient " + std::to_string(k) + " is " + predicted[k].get_str() +
                          " but the ball enumeration counts " + std::to_string(counts[k]) + " elements");
  }
  return series;
}

RadiusOfConvergence::RadiusOfConvergence(const RationalSeries& series)
    : square_free_(poly::square_free(poly::from_int(series.denominator))) {
  const Rational zero(0), one(1);
  if (poly::count_roots(square_free_, zero, one) == 0) {
    infinite_ = true;
    return;
  }
  lo_ = zero;
  hi_ = one;
  const Rational width("1/10000000000000", 10);
  while (hi_ - lo_ >= width) {
    Rational mid = (lo_ + hi_) / 2;
    mid.canonicalize();
    if (poly::count_roots(square_free_, lo_, mid) >= 1)
      hi_ = mid;
    else
      lo_ = mid;
  }
}

double RadiusOfConvergence::value() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  // Refine in floating point inside the exact bracket.
  double a = lo_.get_d(), b = hi_.get_d();
  const double fa = poly::evaluate(square_free_, a);
  for (int i = 0; i < 200 && b - a > 0; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = poly::evaluate(square_free_, m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0))
      a = m;
    else
      b = m;
  }
  return 0.5 * (a + b);
}

bool RadiusOfConvergence::at_most(const Rational& q) const {
  if (infinite_) return false;
  return poly::count_roots(square_free_, Rational(0), q) >= 1;
}

bool RadiusOfConvergence::equals(const Rational& q) const {
  if (infinite_ || q <= 0) return false;
  return poly::evaluate(square_free_, q) == 0 && poly::count_roots(square_free_, Rational(0), q) == 1;
}

bool RadiusOfConvergence::in_factor_interval(const Rational& q) const {
  if (q <= 0) throw InputError("q must be positive");
  return at_most(q) && at_most(1 / q);
}

double rho(const CoxeterSystem& sys, std::size_t cap) { return RadiusOfConvergence(growth_series(sys, cap)).value(); }

double partial_norm2(const std::vector<std::uint64_t>& sphere_counts, double q, std::size_t radius) {
  double sum = 0.0, qn = 1.0;
  for (std::size_t n = 0; n <= radius && n < sphere_counts.size(); ++n) {
    sum += static_cast<double>(sphere_counts[n]) * qn;
    qn *= q;
  }
  return sum;
}

}  // namespace racg
