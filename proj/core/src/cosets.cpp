#include "racg/cosets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "racg/error.hpp"

namespace racg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace

InfinitePair make_infinite_pair(const CoxeterSystem& sys, GeneratorId s, GeneratorId t) {
  sys.check(s);
  sys.check(t);
  if (s == t || sys.commutes(s, t))
    throw InputError("(" + sys.name(s) + ", " + sys.name(t) + ") is not an infinite pair: m(s,t) must be infinity");
  return {s, t};
}

std::vector<InfinitePair> infinite_pairs(const CoxeterSystem& sys) {
  std::vector<InfinitePair> out;
  for (auto s : sys.generators())
    for (auto t : sys.infinite_partners(s).members())
      if (s < t) out.push_back({s, t});
  return out;
}

DoubleCosetInfo shortest_rep(const CoxeterSystem& sys, InfinitePair pair, const Element& w) {
  sys.check(w);
  const GeneratorSet d = GeneratorSet::of({pair.s, pair.t});
  Element cur = w;
  for (;;) {
    const GeneratorSet left = left_descents(sys, cur) & d;
    if (!left.empty()) {
      cur = mult_gen(sys, cur, left.members().front(), Side::left).element;
      continue;
    }
    const GeneratorSet right = right_descents(sys, cur) & d;
    if (!right.empty()) {
      cur = mult_gen(sys, cur, right.members().front(), Side::right).element;
      continue;
    }
    break;
  }
  DoubleCosetInfo info;
  info.pair = pair;
  info.commutes_s = commutes_with_gen(sys, cur, pair.s);
  info.commutes_t = commutes_with_gen(sys, cur, pair.t);
  info.nondegenerate = !(info.commutes_s && info.commutes_t);
  info.w0 = std::move(cur);
  return info;
}

std::vector<Element> dihedral_elements(const CoxeterSystem& sys, InfinitePair pair, std::size_t max_len) {
  std::vector<Element> out{sys.identity()};
  for (auto first : {pair.s, pair.t}) {
    Word w;
    GeneratorId next = first;
    for (std::size_t k = 1; k <= max_len; ++k) {
      w.push_back(next);
      out.push_back(normalize(sys, w));
      next = next == pair.s ? pair.t : pair.s;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element brute_force_min_rep(const CoxeterSystem& sys, InfinitePair pair, const Element& w, std::size_t bound) {
  sys.check(w);
  if (bound < w.length() + 2) throw InputError("brute_force_min_rep needs bound >= |w| + 2");
  if (bound > 512) throw CapacityError("brute_force_min_rep bound is limited to 512");
  const auto ds = dihedral_elements(sys, pair, bound);
  Element best = w;
  for (const auto& d : ds) {
    const Element dw = multiply(sys, d, w);
    for (const auto& d2 : ds) {
      Element x = multiply(sys, dw, d2);
      if (x < best) best = std::move(x);
    }
  }
  return best;
}

std::vector<Element> gamma_neighbors(const CoxeterSystem& sys, const Element& w) {
  sys.check(w);
  std::map<std::pair<GeneratorId, GeneratorId>, bool> nondegenerate;
  auto coset_ok = [&](GeneratorId a, GeneratorId b) {
    auto key = std::minmax(a, b);
    auto it = nondegenerate.find(key);
    if (it != nondegenerate.end()) return it->second;
    const bool ok = shortest_rep(sys, {key.first, key.second}, w).nondegenerate;
    nondegenerate.emplace(key, ok);
    return ok;
  };

  std::vector<Element> out;
  for (auto s : sys.generators()) {
    const auto partners = sys.infinite_partners(s).members();
    const bool has_edge = std::any_of(partners.begin(), partners.end(), [&](GeneratorId t) { return coset_ok(s, t); });
    if (!has_edge) continue;
    out.push_back(mult_gen(sys, w, s, Side::right).element);
    out.push_back(mult_gen(sys, w, s, Side::left).element);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GammaBallGraph build_gamma_ball(const CoxeterSystem& sys, std::size_t radius, std::size_t cap) {
  GammaBallGraph g;
  g.radius = radius;
  g.vertices = ball(sys, radius, cap);
  const std::size_t n = g.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : gamma_neighbors(sys, g.vertices[i])) {
      auto j = g.vertices.index_of(v);
      if (!j) continue;
      g.edges.emplace_back(std::min(i, *j), std::max(i, *j));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  DisjointSets dsu(n);
  for (auto [a, b] : g.edges) dsu.unite(a, b);
  std::vector<std::size_t> label_of_root(n, n);
  g.component.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = dsu.find(i);
    if (label_of_root[root] == n) label_of_root[root] = g.component_count++;
    g.component[i] = label_of_root[root];
  }
  return g;
}

ComponentReport verify_component_structure(const CoxeterSystem& sys, std::size_t radius, std::size_t slack,
                                           std::size_t cap) {
  if (!sys.irreducible()) throw DomainError("component structure requires an irreducible system");
  if (sys.finite()) throw DomainError("component structure requires an infinite system");
  if (sys.rank() < 3) throw DomainError("component structure requires |S| >= 3");
  if (slack > radius) throw PreconditionError("slack must not exceed the radius");

  const GammaBallGraph graph = build_gamma_ball(sys, radius, cap);
  ComponentReport r;
  r.radius = radius;
  r.slack = slack;
  r.expected.push_back(sys.identity());
  if (auto s = sys.free_factor_generator()) r.expected.push_back(sys.generator(*s));

  const std::size_t checked = graph.vertices.prefix_size(radius - slack);
  r.checked_vertices = checked;

  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < checked; ++i) ++sizes[graph.component[i]];
  r.component_count = sizes.size();
  std::size_t main_label = 0;
  for (auto [label, size] : sizes)
    if (size > r.main_component_size) {
      r.main_component_size = size;
      main_label = label;
    }
  for (std::size_t i = 0; i < checked; ++i)
    if (graph.component[i] != main_label) r.exceptional.push_back(graph.vertices[i]);

  std::vector<Element> expected_in_range;
  for (const auto& e : r.expected)
    if (e.length() + slack <= radius) expected_in_range.push_back(e);
  r.pass = r.exceptional == expected_in_range;
  return r;
}

std::string export_edge_list(const CoxeterSystem& sys, const GammaBallGraph& graph) {
  std::string out;
  for (auto [a, b] : graph.edges) {
    out += format_element(sys, graph.vertices[a]);
    out += ' ';
    out += format_element(sys, graph.vertices[b]);
    out += '\n';
  }
  return out;
}

}  // namespace racg
