#include "racg_cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "racg/ball.hpp"
#include "racg/center.hpp"
#include "racg/cosets.hpp"
#include "racg/free_products.hpp"
#include "racg/growth.hpp"
#include "racg/hecke.hpp"
#include "racg_cli/commands.hpp"

namespace racg::cli {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

Word random_word(const CoxeterSystem& sys, Rng& rng, std::size_t max_len) {
  Word w(rng.below(max_len + 1));
  for (auto& g : w) g = gen(rng.below(sys.rank()));
  return w;
}

Element random_element(const CoxeterSystem& sys, Rng& rng, std::size_t max_len) {
  return normalize(sys, random_word(sys, rng, max_len));
}

ExactHecke random_hecke(const CoxeterSystem& sys, Rng& rng) {
  ExactHecke out(sys.tag(), ExactParam{});
  const std::size_t terms = 1 + rng.below(3);
  for (std::size_t i = 0; i < terms; ++i) {
    LaurentPoly c = LaurentPoly::monomial(Rational(rng.between(-3, 3)), static_cast<int>(rng.between(-1, 1)));
    out.add_term(random_element(sys, rng, 3), c);
  }
  return out;
}

class Matrix {
 public:
  void row(const std::string& suite, const std::string& check, std::size_t cases, bool pass) {
    rows_.push_back({{"suite", suite}, {"check", check}, {"cases", cases}, {"result", pass ? "pass" : "FAIL"}});
    all_ = all_ && pass;
  }
  bool all() const { return all_; }
  ordered_json rows() const { return rows_; }

 private:
  ordered_json rows_ = ordered_json::array();
  bool all_ = true;
};

void coxeter_suite(const NamedSystem& ns, Rng& rng, Matrix& m) {
  const auto& sys = ns.system;
  const std::string suite = "coxeter-core/" + ns.name;
  constexpr std::size_t n = 300;

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Word w = random_word(sys, rng, 14);
    const Element e = normalize(sys, w);
    ok = ok && normalize(sys, e.word()) == e && is_reduced(sys, e.word()) && e.length() <= w.size() &&
         (w.size() - e.length()) % 2 == 0;
  }
  m.row(suite, "normal form is reduced, idempotent and parity preserving", n, ok);

  ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Word w = random_word(sys, rng, 10);
    ok = ok && check_conditions(sys, w, gen(rng.below(sys.rank())), gen(rng.below(sys.rank()))).all_hold();
  }
  m.row(suite, "deletion, exchange and folding", n, ok);

  ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = random_element(sys, rng, 8), b = random_element(sys, rng, 8), c = random_element(sys, rng, 8);
    ok = ok && multiply(sys, multiply(sys, a, b), c) == multiply(sys, a, multiply(sys, b, c)) &&
         multiply(sys, a, inverse(sys, a)) == sys.identity();
  }
  m.row(suite, "associativity and inverses", n, ok);

  const Ball b = ball(sys, 6);
  const auto counts = sphere_counts(sys, 6);
  std::size_t total = 0;
  for (auto c : counts) total += c;
  m.row(suite, "ball size equals summed sphere counts", 1, total == b.size());
}

void cosets_suite(const NamedSystem& ns, Rng& rng, Matrix& m) {
  const auto& sys = ns.system;
  const std::string suite = "cosets-gamma/" + ns.name;
  const auto pairs = infinite_pairs(sys);
  constexpr std::size_t n = 60;
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Element w = random_element(sys, rng, 6);
    const InfinitePair pair = pairs[rng.below(pairs.size())];
    ok = ok && shortest_rep(sys, pair, w).w0 == brute_force_min_rep(sys, pair, w, w.length() + 2);
  }
  m.row(suite, "shortest double coset representative", n, ok);
  m.row(suite, "Gamma components at radius 6, slack 2", 1, verify_component_structure(sys, 6, 2).pass);
}

void hecke_suite(const NamedSystem& ns, Rng& rng, Matrix& m) {
  const auto& sys = ns.system;
  const std::string suite = "hecke-algebra/" + ns.name;
  constexpr std::size_t n = 40;
  bool assoc = true, star_ok = true, j_ok = true, trace = true, spec_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const ExactHecke a = random_hecke(sys, rng), b = random_hecke(sys, rng), c = random_hecke(sys, rng);
    const ExactHecke ab = mul(sys, a, b);
    assoc = assoc && mul(sys, ab, c) == mul(sys, a, mul(sys, b, c));
    star_ok = star_ok && star(sys, ab) == mul(sys, star(sys, b), star(sys, a)) && star(sys, star(sys, a)) == a;
    j_ok = j_ok && j_iso(ab) == mul(sys, j_iso(a), j_iso(b)) && j_iso(j_iso(a)) == a &&
           j_iso(star(sys, a)) == star(sys, j_iso(a));
    trace = trace && state_phi(ab) == state_phi(mul(sys, b, a));
    const double q = 0.25 + 0.5 * static_cast<double>(rng.below(8));
    const NumericHecke direct = mul(sys, specialize(a, q), specialize(b, q));
    const NumericHecke via = specialize(ab, q);
    for (const auto* x : {&via, &direct})
      for (const auto& [w, coeff] : x->terms()) {
        const double d = direct.coefficient(w), v = via.coefficient(w);
        spec_ok = spec_ok && std::abs(d - v) <= 1e-12 * std::max({1.0, std::abs(d), std::abs(v)});
      }
  }
  m.row(suite, "associativity (exact)", n, assoc);
  m.row(suite, "star is an anti-automorphism", n, star_ok);
  m.row(suite, "j is a homomorphism onto the 1/q algebra", n, j_ok);
  m.row(suite, "phi(ab) = phi(ba)", n, trace);
  m.row(suite, "specialization commutes with products", n, spec_ok);
}

void growth_suite(const NamedSystem& ns, Rng& rng, Matrix& m) {
  const auto& sys = ns.system;
  const std::string suite = "growth-center/" + ns.name;
  const CenterAnalyzer analyzer(sys);
  const auto taylor = analyzer.series().taylor(8);
  const auto counts = sphere_counts(sys, 8);
  bool series_ok = taylor.size() == counts.size();
  for (std::size_t k = 0; series_ok && k < counts.size(); ++k) series_ok = taylor[k] == mpz_class(std::to_string(counts[k]), 10);
  m.row(suite, "growth series matches enumeration", counts.size(), series_ok);
  const double r = analyzer.radius().value();
  m.row(suite, "rho in (0, 1]", 1, r > 0 && r <= 1);

  constexpr std::size_t n = 20;
  bool duality = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(static_cast<long>(1 + rng.below(40)), static_cast<long>(1 + rng.below(40)));
    q.canonicalize();
    duality = duality && analyzer.classify(q).classification == analyzer.classify(1 / q).classification;
  }
  m.row(suite, "classification is invariant under q -> 1/q", n, duality);

  const auto zeta = zeta_symbol_exact(sys, 6);
  bool sym = true;
  for (GeneratorId s : sys.generators()) sym = sym && check_symbol_commutation(sys, s, zeta, ExactParam{}).pass();
  m.row(suite, "zeta satisfies the commutation identities", sys.rank(), sym);

  bool modes = true;
  for (double q : {0.25, 0.5, 2.0, 4.0}) {
    const auto good = coset_recurrence(q, 1.0, q < 1 ? std::sqrt(q) : -1.0 / std::sqrt(q), 12);
    modes = modes && good.admissible;
  }
  m.row(suite, "coset recurrence admissible modes", 4, modes);
}

void free_products_suite(Rng& rng, Matrix& m) {
  const std::string suite = "free-products";
  bool mass = true;
  for (unsigned k = 1; k <= 6; ++k)
    for (const Rational& q : {Rational(1, 3), Rational(1), Rational(2), Rational(5)}) mass = mass && mu_k(k, q).total() == 1;
  m.row(suite, "mu_k has total mass 1", 24, mass);

  const auto sys = CoxeterSystem::from_names({"s"}, {});
  m.row(suite, "idempotents of N_q(Z2)", 1, check_idempotents(sys, hvn_z2_idempotents(sys, gen(0))).all());

  constexpr std::size_t n = 12;
  bool agree = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<std::vector<unsigned>> specs{{2, 1}, {2, 2}, {3, 1}, {1, 1, 1}};
    const FreeFactorSpec spec{specs[rng.below(specs.size())]};
    Rational q(static_cast<long>(1 + rng.below(30)), static_cast<long>(1 + rng.below(10)));
    q.canonicalize();
    agree = agree && cross_validate_with_rho(spec, q).agree;
  }
  m.row(suite, "closed form, atoms and classification agree", n, agree);

  const auto systems = standard_systems();
  const auto& free3 = systems[0].system;
  const auto& z = systems[1].system;
  const bool free_ok =
      freeness_test(free3, {GeneratorSet::of(gen(0)), GeneratorSet::of(gen(1)), GeneratorSet::of(gen(2))}, 6).pass() &&
      freeness_test(z, {GeneratorSet::of(gen(0)), GeneratorSet::of({gen(1), gen(2)})}, 6).pass();
  m.row(suite, "alternating centered words have zero state", 2, free_ok);
}

}  // namespace

ordered_json run_verify_suite(std::uint64_t seed, bool& passed) {
  Rng rng(seed);
  Matrix m;
  const auto systems = standard_systems();
  for (const auto& ns : systems) coxeter_suite(ns, rng, m);
  for (const auto& ns : systems) cosets_suite(ns, rng, m);
  for (const auto& ns : systems) hecke_suite(ns, rng, m);
  for (const auto& ns : systems) growth_suite(ns, rng, m);
  free_products_suite(rng, m);
  passed = m.all();
  ordered_json out;
  out["checks"] = m.rows();
  out["passed"] = passed;
  return out;
}

}  // namespace racg::cli
