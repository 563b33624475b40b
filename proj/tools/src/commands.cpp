#include "racg_cli/commands.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "racg/ball.hpp"
#include "racg/center.hpp"
#include "racg/cosets.hpp"
#include "racg/error.hpp"
#include "racg/free_products.hpp"
#include "racg/growth.hpp"
#include "racg/hecke_expr.hpp"
#include "racg_cli/group_file.hpp"
#include "racg_cli/report.hpp"
#include "racg_cli/verify_suite.hpp"

namespace racg::cli {

namespace {

struct RunConfig {
  std::string group_path;
  std::size_t radius = 4;
  std::string q_text;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t max_ball = kDefaultBallCap;
  std::size_t slack = 2;
  bool list = false;
  bool edges = false;
  std::string ranks;
  std::string expr;
};

ordered_json big_int(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json int_poly(const IntPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p) out.push_back(big_int(c));
  return out;
}

ordered_json real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

ordered_json words(const CoxeterSystem& sys, const std::vector<Element>& elems) {
  ordered_json out = ordered_json::array();
  for (const auto& e : elems) out.push_back(format_element(sys, e));
  return out;
}

ordered_json names(const CoxeterSystem& sys, GeneratorSet set) {
  ordered_json out = ordered_json::array();
  for (GeneratorId g : set.members()) out.push_back(sys.name(g));
  return out;
}

ordered_json header(const std::string& command) {
  ordered_json out;
  out["schema"] = 1;
  out["command"] = command;
  return out;
}

Rational parse_q(const std::string& text) {
  if (text.empty()) throw InputError("--q is required for this command");
  Rational q = parse_rational(text);
  if (q <= 0) throw InputError("--q must be positive");
  return q;
}

CoxeterSystem require_group(const RunConfig& cfg) {
  if (cfg.group_path.empty()) throw InputError("--group <file> is required for this command");
  return load_group_file(cfg.group_path);
}

std::string component_kind(GeneratorSet comp) {
  if (comp.size() == 1) return "finite (Z2)";
  if (comp.size() == 2) return "infinite dihedral";
  return "irreducible, infinite, " + std::to_string(comp.size()) + " generators";
}

// ---- commands ----------------------------------------------------------

ordered_json cmd_info(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  ordered_json out = header("info");
  out["generators"] = sys.names();
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : sys.commuting_pairs()) pairs.push_back({sys.name(a), sys.name(b)});
  out["commuting_pairs"] = pairs;
  out["rank"] = sys.rank();
  out["irreducible"] = sys.irreducible();
  out["finite"] = sys.finite();
  if (sys.irreducible())
    out["summary"] = std::string("irreducible, ") + (sys.finite() ? "finite, " : "infinite, ") +
                     std::to_string(sys.rank()) + (sys.rank() == 1 ? " generator" : " generators");
  else
    out["summary"] = std::to_string(sys.components().size()) + " components";
  ordered_json comps = ordered_json::array();
  for (GeneratorSet c : sys.components()) {
    ordered_json item;
    item["generators"] = names(sys, c);
    item["finite"] = c.size() == 1;
    item["kind"] = component_kind(c);
    comps.push_back(item);
  }
  out["components"] = comps;
  if (auto g = sys.free_factor_generator())
    out["exceptional_shape"] = "Z2 * Z2^" + std::to_string(sys.rank() - 1) + " with free factor " + sys.name(*g);
  else
    out["exceptional_shape"] = nullptr;
  if (auto cs = clique_structure(sys))
    out["clique_free_product"] = cs->spec.ranks;
  else
    out["clique_free_product"] = nullptr;
  return out;
}

ordered_json cmd_ball(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  const Ball b = ball(sys, cfg.radius, cfg.max_ball);
  ordered_json out = header("ball");
  out["radius"] = cfg.radius;
  out["size"] = b.size();
  ordered_json counts = ordered_json::array();
  for (std::size_t n = 0; n <= cfg.radius; ++n) counts.push_back(b.sphere(n).size());
  out["sphere_counts"] = counts;
  if (cfg.list) {
    ordered_json spheres = ordered_json::array();
    for (std::size_t n = 0; n <= cfg.radius; ++n) {
      const auto s = b.sphere(n);
      spheres.push_back(words(sys, std::vector<Element>(s.begin(), s.end())));
    }
    out["spheres"] = spheres;
  }
  return out;
}

ordered_json cmd_growth(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  const RationalSeries series = growth_series(sys, cfg.max_ball);
  ordered_json out = header("growth");
  out["series"] = series.to_string();
  out["numerator"] = int_poly(series.numerator);
  out["denominator"] = int_poly(series.denominator);
  ordered_json taylor = ordered_json::array();
  for (const auto& c : series.taylor(12)) taylor.push_back(big_int(c));
  out["coefficients"] = taylor;
  return out;
}

ordered_json cmd_rho(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  const RationalSeries series = growth_series(sys, cfg.max_ball);
  const RadiusOfConvergence r(series);
  ordered_json out = header("rho");
  out["rho"] = real(r.value());
  out["finite_group"] = r.infinite();
  if (!r.infinite()) {
    out["bracket"] = {r.lower().get_str(), r.upper().get_str()};
    out["inverse"] = real(1.0 / r.value());
  }
  out["denominator"] = poly::format(series.denominator);
  return out;
}

ordered_json center_json(const CoxeterSystem& sys, const CenterReport& rep) {
  ordered_json out = header("classify");
  out["q"] = rep.q.get_str();
  out["rho"] = real(rep.rho);
  out["classification"] = to_string(rep.classification);
  out["center_dimension"] = rep.center_dimension ? ordered_json(*rep.center_dimension) : ordered_json("unknown");
  if (!rep.reason.empty()) out["reason"] = rep.reason;
  ordered_json comps = ordered_json::array();
  for (const auto& c : rep.components) {
    ordered_json item;
    item["generators"] = names(sys, c.generators);
    item["rho"] = real(c.rho);
    item["classification"] = to_string(c.classification);
    item["center_dimension"] = c.center_dimension ? ordered_json(*c.center_dimension) : ordered_json("unknown");
    if (!c.reason.empty()) item["reason"] = c.reason;
    comps.push_back(item);
  }
  out["components"] = comps;
  return out;
}

ordered_json cmd_classify(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  const Rational q = parse_q(cfg.q_text);
  const CenterAnalyzer analyzer(sys, cfg.max_ball);
  return center_json(sys, analyzer.classify(q));
}

ordered_json cmd_gamma(const RunConfig& cfg, std::string* raw) {
  const CoxeterSystem sys = require_group(cfg);
  if (cfg.edges) {
    *raw = export_edge_list(sys, build_gamma_ball(sys, cfg.radius, cfg.max_ball));
    return {};
  }
  const ComponentReport rep = verify_component_structure(sys, cfg.radius, cfg.slack, cfg.max_ball);
  ordered_json out = header("gamma");
  out["radius"] = rep.radius;
  out["slack"] = rep.slack;
  out["checked_vertices"] = rep.checked_vertices;
  out["component_count"] = rep.component_count;
  out["main_component_size"] = rep.main_component_size;
  out["exceptional"] = words(sys, rep.exceptional);
  out["expected"] = words(sys, rep.expected);
  out["pass"] = rep.pass;
  return out;
}

ordered_json cmd_zeta_check(const RunConfig& cfg, bool& ok) {
  const CoxeterSystem sys = require_group(cfg);
  const Rational q = parse_q(cfg.q_text);
  const auto numeric = zeta_symbol(sys, q, cfg.radius, cfg.max_ball);
  const auto exact = zeta_symbol_exact(sys, cfg.radius, cfg.max_ball);
  const RationalSeries series = growth_series(sys, cfg.max_ball);
  const RadiusOfConvergence rad(series);

  ordered_json out = header("zeta-check");
  out["q"] = q.get_str();
  out["rho"] = real(rad.value());
  out["radius"] = cfg.radius;

  ordered_json commutation = ordered_json::array();
  bool symbols_ok = true;
  for (GeneratorId s : sys.generators()) {
    const SymbolCheck c = check_symbol_commutation(sys, s, exact, ExactParam{});
    ordered_json item;
    item["generator"] = sys.name(s);
    item["checked"] = c.checked;
    item["pass"] = c.pass();
    if (!c.pass()) item["witnesses"] = words(sys, c.witnesses);
    symbols_ok = symbols_ok && c.pass();
    commutation.push_back(item);
  }
  out["commutation"] = commutation;

  std::size_t cosets = 0, coset_points = 0;
  std::vector<Element> coset_witnesses;
  for (const auto& pair : infinite_pairs(sys)) {
    std::set<Element> reps;
    for (const auto& w : exact.ball->elements()) {
      const auto info = shortest_rep(sys, pair, w);
      if (info.nondegenerate) reps.insert(info.w0);
    }
    for (const auto& w0 : reps) {
      const SymbolCheck c = double_coset_symbol_check(sys, pair, w0, exact, ExactParam{});
      ++cosets;
      coset_points += c.checked;
      coset_witnesses.insert(coset_witnesses.end(), c.witnesses.begin(), c.witnesses.end());
    }
  }
  symbols_ok = symbols_ok && coset_witnesses.empty();
  out["double_cosets"] = {{"cosets", cosets}, {"points", coset_points}, {"pass", coset_witnesses.empty()}};

  ordered_json partial = ordered_json::array();
  double sum = 0.0;
  for (std::size_t n = 0; n <= cfg.radius; ++n) {
    for (std::size_t i = n == 0 ? 0 : numeric.ball->prefix_size(n - 1); i < numeric.ball->prefix_size(n); ++i)
      sum += numeric.values[i] * numeric.values[i];
    partial.push_back(sum);
  }
  out["partial_norms_squared"] = partial;
  const bool converges = !rad.at_most(q);
  out["growth_value"] = converges ? real(series.evaluate(q).get_d()) : ordered_json("diverges");

  bool projection_ok = true;
  if (!converges) {
    out["projection"] = "not applicable: q >= rho, zeta is not square summable";
  } else if (!sys.irreducible() || sys.rank() < 3) {
    out["projection"] = "not applicable: requires an irreducible system with |S| >= 3";
  } else if (cfg.radius < 2) {
    out["projection"] = "not applicable: radius must be at least 2";
  } else {
    const ProjectionReport p = verify_central_projection(sys, q, cfg.radius, cfg.max_ball);
    ordered_json pj;
    pj["compressed_radius"] = p.compressed_radius;
    pj["eigen_equation_exact"] = p.eigen_equation_exact;
    pj["eigen_equation_residual"] = real(p.eigen_equation_residual);
    pj["idempotence_residual"] = real(p.idempotence_residual);
    pj["tail_bound"] = real(p.tail_bound);
    pj["commutator_residual"] = real(p.commutator_residual);
    pj["rayleigh_quotient"] = real(p.rayleigh_quotient);
    pj["growth_value"] = real(p.growth_value);
    projection_ok = p.eigen_equation_exact && p.idempotence_residual <= p.tail_bound && p.commutator_residual < 1e-9;
    pj["pass"] = projection_ok;
    out["projection"] = pj;
  }
  ok = symbols_ok && projection_ok;
  out["pass"] = ok;
  return out;
}

std::vector<unsigned> parse_ranks(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3)
      throw InputError("--ranks expects a comma separated list of positive integers, got '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return out;
}

ordered_json cmd_dykema(const RunConfig& cfg) {
  const Rational q = parse_q(cfg.q_text);
  FreeFactorSpec spec;
  std::optional<CoxeterSystem> sys;
  std::vector<GeneratorSet> blocks;
  if (!cfg.group_path.empty()) {
    sys = load_group_file(cfg.group_path);
    auto cs = clique_structure(*sys);
    if (!cs) throw InputError("the commutation graph must be a disjoint union of at least two cliques");
    spec = cs->spec;
    blocks = cs->blocks;
  } else if (!cfg.ranks.empty()) {
    spec.ranks = parse_ranks(cfg.ranks);
    validate(spec);
    sys = free_product_system(spec);
    blocks = clique_structure(*sys)->blocks;
  } else {
    throw InputError("dykema needs --ranks k1,k2,... or --group <file>");
  }
  validate(spec);

  const DecompositionReport rep = dykema_decompose(spec, q);
  const CrossValidation cv = cross_validate_with_rho(spec, q);

  ordered_json out = header("dykema");
  out["ranks"] = spec.ranks;
  out["q"] = q.get_str();
  out["fold_order"] = rep.order;
  out["diffuse_part"] = rep.diffuse ? "L(F_s), s >= 1" : "absent";
  ordered_json atoms = ordered_json::array();
  for (const auto& a : rep.atoms.atoms) {
    ordered_json tuple = ordered_json::array();
    for (std::size_t i = 0; i < a.subsets.size(); ++i) {
      const auto members = blocks[i].members();
      GeneratorSet set;
      for (std::size_t j = 0; j < members.size(); ++j)
        if ((a.subsets[i] >> j) & 1U) set.insert(members[j]);
      tuple.push_back(format_element(*sys, product_of(*sys, set)));
    }
    atoms.push_back({{"tuple", tuple}, {"weight", a.mass.get_str()}});
  }
  out["atoms"] = atoms;
  out["closed_form_condition"] = closed_form_condition(spec, q);
  out["cross_validation"] = {{"rho", real(cv.rho)},
                             {"outside_interval", cv.outside_interval},
                             {"classification", to_string(cv.classification)},
                             {"agree", cv.agree}};
  return out;
}

ordered_json cmd_hecke(const RunConfig& cfg) {
  const CoxeterSystem sys = require_group(cfg);
  if (cfg.expr.empty()) throw InputError("hecke needs --expr '<expression>'");
  const ExactHecke a = parse_hecke(sys, cfg.expr);
  ordered_json out = header("hecke");
  out["input"] = cfg.expr;
  out["value"] = format_hecke(sys, a);
  out["parameter"] = a.param().inverted ? "1/q" : "q";
  out["phi"] = state_phi(a).to_string();
  out["star"] = format_hecke(sys, star(sys, a));
  out["terms"] = a.size();
  if (!cfg.q_text.empty()) {
    const Rational q = parse_q(cfg.q_text);
    const NumericHecke n = specialize(a, q.get_d());
    out["at_q"] = {{"q", q.get_str()},
                   {"value", format_hecke(sys, n)},
                   {"phi", real(state_phi(n))},
                   {"l2_norm", real(l2_norm(n))}};
  }
  return out;
}

std::string verify_table(const ordered_json& report) {
  std::size_t w_suite = 5, w_check = 5;
  for (const auto& row : report["checks"]) {
    w_suite = std::max(w_suite, row["suite"].get<std::string>().size());
    w_check = std::max(w_check, row["check"].get<std::string>().size());
  }
  auto pad = [](std::string s, std::size_t w) { return s.append(w - s.size(), ' '); };
  std::ostringstream os;
  os << "seed " << report["seed"].get<std::uint64_t>() << "\n";
  os << pad("suite", w_suite) << "  " << pad("check", w_check) << "  cases  result\n";
  for (const auto& row : report["checks"]) {
    const std::string cases = std::to_string(row["cases"].get<std::size_t>());
    os << pad(row["suite"].get<std::string>(), w_suite) << "  " << pad(row["check"].get<std::string>(), w_check) << "  "
       << std::string(5 - std::min<std::size_t>(5, cases.size()), ' ') << cases << "  "
       << row["result"].get<std::string>() << "\n";
  }
  os << (report["passed"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace

std::vector<NamedSystem> standard_systems() {
  return {
      {"free3", CoxeterSystem::from_names({"s", "t", "u"}, {})},
      {"z2sq_free_z2", CoxeterSystem::from_names({"s", "t", "u"}, {{"t", "u"}})},
      {"pentagon", CoxeterSystem::from_names({"a", "b", "c", "d", "e"},
                                             {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}})},
  };
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Coxeter groups, Hecke algebras and the factoriality of N_q(W)", "racg"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-ball", cfg.max_ball, "Largest ball that may be enumerated")->check(CLI::PositiveNumber);
  };
  auto add_group = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--group", cfg.group_path, "Group file (JSON)");
    if (required) opt->required();
  };

  auto* info = app.add_subcommand("info", "Generators, components and shape of a system");
  add_group(info, true);
  add_format(info);

  auto* ball_cmd = app.add_subcommand("ball", "Enumerate the ball of given radius");
  add_group(ball_cmd, true);
  ball_cmd->add_option("--radius", cfg.radius, "Ball radius");
  ball_cmd->add_flag("--list", cfg.list, "List the elements of each sphere");
  add_format(ball_cmd);

  auto* growth = app.add_subcommand("growth", "Growth series as a rational function");
  add_group(growth, true);
  add_format(growth);

  auto* rho_cmd = app.add_subcommand("rho", "Radius of convergence of the growth series");
  add_group(rho_cmd, true);
  add_format(rho_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Center of N_q(W): factor or factor plus C");
  add_group(classify_cmd, true);
  classify_cmd->add_option("--q", cfg.q_text, "Parameter q as a/b or a decimal")->required();
  add_format(classify_cmd);

  auto* gamma = app.add_subcommand("gamma", "Components of the graph Gamma on a ball");
  add_group(gamma, true);
  gamma->add_option("--radius", cfg.radius, "Ball radius");
  gamma->add_option("--slack", cfg.slack, "Ignore vertices within this distance of the boundary");
  gamma->add_flag("--edges", cfg.edges, "Print the edge list instead of the component report");
  add_format(gamma);

  auto* zeta = app.add_subcommand("zeta-check", "Certify the central symbol zeta on a ball");
  add_group(zeta, true);
  zeta->add_option("--q", cfg.q_text, "Parameter q <= 1")->required();
  zeta->add_option("--radius", cfg.radius, "Ball radius");
  add_format(zeta);

  auto* dykema = app.add_subcommand("dykema", "Decomposition of N_q(Z2^k1 * ... * Z2^kn)");
  dykema->add_option("--ranks", cfg.ranks, "Clique sizes k1,k2,...");
  add_group(dykema, false);
  dykema->add_option("--q", cfg.q_text, "Parameter q")->required();
  add_format(dykema);

  auto* hecke = app.add_subcommand("hecke", "Evaluate a Hecke algebra expression");
  add_group(hecke, true);
  hecke->add_option("--expr", cfg.expr, "Expression, e.g. 'T(s)*T(s)'")->required();
  hecke->add_option("--q", cfg.q_text, "Also evaluate at this q");
  add_format(hecke);

  auto* verify = app.add_subcommand("verify", "Run the property suites of every module");
  verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    ordered_json report;
    std::string raw;
    int code = kPass;
    if (name == "info") {
      report = cmd_info(cfg);
    } else if (name == "ball") {
      report = cmd_ball(cfg);
    } else if (name == "growth") {
      report = cmd_growth(cfg);
    } else if (name == "rho") {
      report = cmd_rho(cfg);
    } else if (name == "classify") {
      report = cmd_classify(cfg);
    } else if (name == "gamma") {
      report = cmd_gamma(cfg, &raw);
      if (raw.empty() && !report.value("pass", false)) code = kFailure;
    } else if (name == "zeta-check") {
      bool ok = false;
      report = cmd_zeta_check(cfg, ok);
      if (!ok) code = kFailure;
    } else if (name == "dykema") {
      report = cmd_dykema(cfg);
    } else if (name == "hecke") {
      report = cmd_hecke(cfg);
    } else if (name == "verify") {
      bool passed = false;
      report = header("verify");
      report["seed"] = cfg.seed;
      report.update(run_verify_suite(cfg.seed, passed));
      if (!passed) code = kFailure;
    }
    if (name == "verify" && cfg.format == "text") raw = verify_table(report);
    if (!raw.empty())
      out << raw;
    else
      out << (cfg.format == "json" ? render_json(report) : render_text(report));
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kFailure;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace racg::cli
