#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "racg/ball.hpp"
#include "racg/coxeter.hpp"

namespace racg {

/// Generators s != t with m(s,t) = infinity; D = <s,t> is infinite dihedral.
struct InfinitePair {
  GeneratorId s;
  GeneratorId t;

  friend bool operator==(const InfinitePair&, const InfinitePair&) = default;
};

/// Throws InputError unless m(s,t) = infinity.
InfinitePair make_infinite_pair(const CoxeterSystem& sys, GeneratorId s, GeneratorId t);

/// Every infinite pair with s < t.
std::vector<InfinitePair> infinite_pairs(const CoxeterSystem& sys);

struct DoubleCosetInfo {
  InfinitePair pair;
  Element w0;  // shortest element of DwD
  bool commutes_s = false;
  bool commutes_t = false;
  bool nondegenerate = false;  // w0 does not centralize D
};

/// Strips {s,t}-descents greedily: left before right, smaller generator first.
DoubleCosetInfo shortest_rep(const CoxeterSystem& sys, InfinitePair pair, const Element& w);

/// Elements of D = <s,t> of length at most max_len (alternating words).
std::vector<Element> dihedral_elements(const CoxeterSystem& sys, InfinitePair pair, std::size_t max_len);

/// Minimum over d·w·d' with |d|, |d'| <= bound. Requires bound >= |w| + 2.
Element brute_force_min_rep(const CoxeterSystem& sys, InfinitePair pair, const Element& w, std::size_t bound);

/// {ws, sw : some t with m(s,t) = inf makes D w D non-degenerate}, sorted.
std::vector<Element> gamma_neighbors(const CoxeterSystem& sys, const Element& w);

/// The graph Gamma(W,S) restricted to a ball; edges leaving the ball are dropped.
struct GammaBallGraph {
  std::size_t radius = 0;
  Ball vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::size_t> component;                      // label per vertex, labels are dense
  std::size_t component_count = 0;
};

GammaBallGraph build_gamma_ball(const CoxeterSystem& sys, std::size_t radius, std::size_t cap = kDefaultBallCap);

struct ComponentReport {
  std::size_t radius = 0;
  std::size_t slack = 0;
  std::size_t checked_vertices = 0;   // vertices with |w| <= radius - slack
  std::size_t component_count = 0;    // distinct components among checked vertices
  std::size_t main_component_size = 0;
  std::vector<Element> exceptional;   // checked vertices outside the main component
  std::vector<Element> expected;      // identity, plus the Z2 free-factor generator when present
  bool pass = false;
};

/// Empirical connectivity check of Gamma on a ball. Requires an irreducible
/// infinite system with at least three generators.
ComponentReport verify_component_structure(const CoxeterSystem& sys, std::size_t radius, std::size_t slack = 2,
                                           std::size_t cap = kDefaultBallCap);

/// One "u v" line per edge, using canonical word strings.
std::string export_edge_list(const CoxeterSystem& sys, const GammaBallGraph& graph);

}  // namespace racg
