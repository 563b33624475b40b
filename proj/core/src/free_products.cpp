#include "racg/free_products.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "racg/ball.hpp"
#include "racg/error.hpp"
#include "racg/growth.hpp"

namespace racg {

namespace {

std::string block_name(std::size_t block, std::size_t j) {
  const std::string prefix = block < 26 ? std::string(1, static_cast<char>('a' + block)) : "f" + std::to_string(block) + "_";
  return prefix + std::to_string(j + 1);
}

Rational power(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

void validate(const FreeFactorSpec& spec) {
  if (spec.ranks.size() < 2) throw InputError("a free product needs at least two factors");
  unsigned total = 0;
  for (unsigned k : spec.ranks) {
    if (k == 0) throw InputError("every factor rank must be at least 1");
    total += k;
  }
  if (total > 64) throw InputError("at most 64 generators are supported");
}

CoxeterSystem free_product_system(const FreeFactorSpec& spec) {
  validate(spec);
  std::vector<std::string> names;
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  for (std::size_t b = 0; b < spec.ranks.size(); ++b) {
    const std::size_t first = names.size();
    for (std::size_t j = 0; j < spec.ranks[b]; ++j) names.push_back(block_name(b, j));
    for (std::size_t x = first; x < names.size(); ++x)
      for (std::size_t y = x + 1; y < names.size(); ++y) pairs.emplace_back(gen(x), gen(y));
  }
  return CoxeterSystem(std::move(names), pairs);
}

std::optional<CliqueStructure> clique_structure(const CoxeterSystem& sys) {
  CliqueStructure out;
  GeneratorSet seen;
  for (GeneratorId g : sys.generators()) {
    if (seen.contains(g)) continue;
    const GeneratorSet block = sys.centralizer(g);
    for (GeneratorId h : block.members())
      if (!(sys.centralizer(h) == block)) return std::nullopt;
    seen = seen | block;
    out.blocks.push_back(block);
    out.spec.ranks.push_back(static_cast<unsigned>(block.size()));
  }
  if (out.blocks.size() < 2) return std::nullopt;
  return out;
}

Rational AtomicMeasure::total() const {
  Rational sum = 0;
  for (const auto& a : atoms) sum += a.mass;
  return sum;
}

AtomicMeasure mu_k(unsigned k, const Rational& q) {
  if (k == 0 || k > 20) throw InputError("mu_k needs 1 <= k <= 20");
  if (q <= 0) throw InputError("q must be positive");
  const Rational scale = 1 / power(q + 1, k);
  AtomicMeasure out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
    out.atoms.push_back({{mask}, power(q, static_cast<unsigned>(std::popcount(mask))) * scale});
  return out;
}

Z2Idempotents hvn_z2_idempotents(const CoxeterSystem& sys, GeneratorId s) {
  sys.check(s);
  const ExactParam param{};
  const ExactHecke one = unit(sys, param);
  const ExactHecke ts = t_basis(sys, sys.generator(s), param);
  const LaurentPoly u = LaurentPoly::u();
  Z2Idempotents out;
  out.plus = ts * u + one;
  out.minus = one * (u * u) - ts * u;
  out.denominator = u * u + LaurentPoly(1);
  return out;
}

IdempotentCheck check_idempotents(const CoxeterSystem& sys, const Z2Idempotents& e) {
  const ExactHecke one = unit(sys, e.plus.param());
  const ExactHecke zero(sys.tag(), e.plus.param());
  const LaurentPoly& d = e.denominator;
  IdempotentCheck out;
  out.sum_is_unit = e.plus + e.minus == one * d;
  out.plus_idempotent = mul(sys, e.plus, e.plus) == e.plus * d;
  out.minus_idempotent = mul(sys, e.minus, e.minus) == e.minus * d;
  out.self_adjoint = star(sys, e.plus) == e.plus && star(sys, e.minus) == e.minus;
  out.orthogonal = mul(sys, e.plus, e.minus) == zero && mul(sys, e.minus, e.plus) == zero;
  // phi(e+) (u^2 + 1) = 1 and phi(e-) (u^2 + 1) = u^2.
  out.plus_state = state_phi(e.plus) == LaurentPoly(1) && d == LaurentPoly::monomial(1, 2) + LaurentPoly(1);
  out.minus_state = state_phi(e.minus) == LaurentPoly::monomial(1, 2) && out.plus_state;
  return out;
}

DecompositionReport dykema_decompose(const FreeFactorSpec& spec, const Rational& q) {
  validate(spec);
  if (q <= 0) throw InputError("q must be positive");
  if (*std::max_element(spec.ranks.begin(), spec.ranks.end()) < 2)
    throw PreconditionError("the iterated decomposition needs a factor Z2^k with k >= 2; every rank here is 1");

  DecompositionReport report;
  report.q = q;
  report.order.resize(spec.ranks.size());
  std::iota(report.order.begin(), report.order.end(), 0);
  std::stable_sort(report.order.begin(), report.order.end(),
                   [&](std::size_t a, std::size_t b) { return spec.ranks[a] > spec.ranks[b]; });
  for (std::size_t i : report.order) report.spec.ranks.push_back(spec.ranks[i]);

  AtomicMeasure current = mu_k(report.spec.ranks[0], q);
  for (std::size_t step = 1; step < report.spec.ranks.size(); ++step) {
    const AtomicMeasure next = mu_k(report.spec.ranks[step], q);
    AtomicMeasure combined;
    for (const auto& x : current.atoms) {
      for (const auto& y : next.atoms) {
        Rational weight = x.mass + y.mass - 1;
        if (weight <= 0) continue;
        auto subsets = x.subsets;
        subsets.push_back(y.subsets[0]);
        combined.atoms.push_back({std::move(subsets), std::move(weight)});
      }
    }
    current = std::move(combined);
  }
  report.diffuse = current.total() < 1;

  for (auto& atom : current.atoms) {
    std::vector<std::uint64_t> by_input(spec.ranks.size());
    for (std::size_t i = 0; i < report.order.size(); ++i) by_input[report.order[i]] = atom.subsets[i];
    atom.subsets = std::move(by_input);
  }
  std::sort(current.atoms.begin(), current.atoms.end(),
            [](const auto& a, const auto& b) { return a.subsets < b.subsets; });
  report.atoms = std::move(current);
  return report;
}

bool closed_form_condition(const FreeFactorSpec& spec, const Rational& q) {
  validate(spec);
  if (q <= 0) throw InputError("q must be positive");
  const Rational big = q >= 1 ? q : Rational(1 / q);
  const Rational ratio = big / (big + 1);
  Rational sum = 0;
  for (unsigned k : spec.ranks) sum += power(ratio, k);
  return sum > static_cast<long>(spec.ranks.size() - 1);
}

CrossValidation cross_validate_with_rho(const FreeFactorSpec& spec, const Rational& q) {
  const CoxeterSystem sys = free_product_system(spec);
  const CenterAnalyzer analyzer(sys);
  CrossValidation out;
  out.q = q;
  out.closed_form = closed_form_condition(spec, q);
  const Rational big = q >= 1 ? q : Rational(1 / q);
  out.outside_interval = !analyzer.radius().at_most(1 / big);
  out.rho = analyzer.radius().value();
  if (*std::max_element(spec.ranks.begin(), spec.ranks.end()) >= 2)
    out.atom_count = dykema_decompose(spec, q).atoms.atoms.size();
  out.classification = analyzer.classify(q).classification;

  out.agree = out.closed_form == out.outside_interval;
  if (out.atom_count) out.agree = out.agree && *out.atom_count == (out.closed_form ? 1U : 0U);
  if (out.classification != Classification::not_applicable)
    out.agree = out.agree && (out.classification == Classification::factor_plus_C) == out.closed_form;
  return out;
}

FreenessReport freeness_test(const CoxeterSystem& sys, const std::vector<GeneratorSet>& blocks, std::size_t max_len) {
  GeneratorSet covered;
  for (GeneratorSet b : blocks) {
    if (b.empty()) throw InputError("partition blocks must be nonempty");
    if (!(b & covered).empty()) throw InputError("partition blocks must be disjoint");
    if (!b.subset_of(sys.all())) throw InputError("partition block contains an unknown generator");
    covered = covered | b;
  }
  if (!(covered == sys.all())) throw InputError("partition blocks must cover every generator");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (GeneratorId g : blocks[i].members())
        if (!(sys.centralizer(g) & blocks[j]).empty())
          throw InputError("generators " + sys.name(g) + " and " + format_set(sys, sys.centralizer(g) & blocks[j]) +
                           " lie in different blocks but commute");

  const Ball b = ball(sys, max_len);
  std::vector<std::vector<Element>> block_elements(blocks.size());
  for (const auto& w : b.elements()) {
    if (w.is_identity()) continue;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (support(w).subset_of(blocks[i])) block_elements[i].push_back(w);
  }

  const ExactParam param{};
  const ExactHecke one = unit(sys, param);
  FreenessReport report;
  std::vector<Element> sequence;

  auto centered = [&](const Element& w) {
    const ExactHecke t = t_basis(sys, w, param);
    return t - one * state_phi(t);
  };
  auto recurse = [&](auto& self, const ExactHecke& product, std::size_t last_block, std::size_t used) -> void {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i == last_block) continue;
      for (const auto& w : block_elements[i]) {
        if (used + w.length() > max_len) break;
        const ExactHecke next = mul(sys, product, centered(w));
        sequence.push_back(w);
        ++report.sequences;
        if (!state_phi(next).is_zero()) report.witnesses.push_back(sequence);
        self(self, next, i, used + w.length());
        sequence.pop_back();
      }
    }
  };
  recurse(recurse, one, blocks.size(), 0);
  return report;
}

}  // namespace racg
