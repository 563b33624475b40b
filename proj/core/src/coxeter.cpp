#include "racg/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "racg/error.hpp"

namespace racg {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

// Letters that cannot move past `l`: the non-commuting ones and `l` itself.
GeneratorSet blockers(const CoxeterSystem& sys, GeneratorId l) {
  return (sys.all() - sys.centralizer(l)) | GeneratorSet::of(l);
}

// Right multiplication of a normal-form word by s, keeping normal form.
// A cancelled letter leaves a normal form; an appended letter is inserted
// at the leftmost admissible slot of the tail that commutes with s.
int append_right(const CoxeterSystem& sys, Word& nf, GeneratorId s) {
  std::size_t tail = nf.size();
  while (tail > 0) {
    const GeneratorId l = nf[tail - 1];
    if (l == s) {
      nf.erase(nf.begin() + static_cast<std::ptrdiff_t>(tail - 1));
      return -1;
    }
    if (!sys.commutes(l, s)) break;
    --tail;
  }
  auto pos = std::find_if(nf.begin() + static_cast<std::ptrdiff_t>(tail), nf.end(),
                          [s](GeneratorId l) { return l > s; });
  nf.insert(pos, s);
  return +1;
}

// Left multiplication on a reduced word; the result is reduced but not
// necessarily in normal form.
int prepend_left(const CoxeterSystem& sys, Word& w, GeneratorId s) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == s) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      return -1;
    }
    if (!sys.commutes(w[i], s)) break;
  }
  w.insert(w.begin(), s);
  return +1;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name == "1") return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::vector<GeneratorId> GeneratorSet::members() const {
  std::vector<GeneratorId> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(gen(static_cast<std::size_t>(std::countr_zero(b))));
  return out;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(), b.word_.end());
      c != 0)
    return c;
  return a.tag_ <=> b.tag_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = kFnvOffset;
  for (auto g : w) {
    h ^= g.index;
    h *= kFnvPrime;
  }
  return static_cast<std::size_t>(h);
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  return WordHash{}(e.word()) ^ static_cast<std::size_t>(e.system_tag() * 0x9e3779b97f4a7c15ULL);
}

// ---- CoxeterSystem -----------------------------------------------------

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             const std::vector<std::pair<GeneratorId, GeneratorId>>& commuting_pairs)
    : names_(std::move(names)) {
  if (names_.empty()) throw InputError("a Coxeter system needs at least one generator");
  if (names_.size() > kMaxGenerators)
    throw InputError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw InputError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate generator '" + n + "'");
  }

  const std::size_t n = names_.size();
  centralizer_.assign(n, GeneratorSet{});
  for (std::size_t i = 0; i < n; ++i) centralizer_[i].insert(gen(i));
  for (auto [s, t] : commuting_pairs) {
    if (s.index >= n || t.index >= n) throw InputError("commuting pair refers to an unknown generator");
    if (s == t) throw InputError("self pair (" + names_[s.index] + ", " + names_[s.index] + ") is not allowed");
    if (centralizer_[s.index].contains(t))
      throw InputError("duplicate commuting pair (" + names_[s.index] + ", " + names_[t.index] + ")");
    centralizer_[s.index].insert(t);
    centralizer_[t.index].insert(s);
  }

  // Components of the non-commutation graph.
  GeneratorSet unvisited = all();
  while (!unvisited.empty()) {
    const GeneratorId root = unvisited.members().front();
    GeneratorSet comp = GeneratorSet::of(root);
    std::vector<GeneratorId> stack{root};
    unvisited.erase(root);
    while (!stack.empty()) {
      const GeneratorId g = stack.back();
      stack.pop_back();
      for (auto h : (infinite_partners(g) & unvisited).members()) {
        unvisited.erase(h);
        comp.insert(h);
        stack.push_back(h);
      }
    }
    components_.push_back(comp);
  }

  std::uint64_t h = kFnvOffset;
  for (const auto& name : names_) {
    for (char c : name) fnv_mix(h, static_cast<unsigned char>(c));
    fnv_mix(h, 0xff);
  }
  for (auto c : centralizer_) fnv_mix(h, c.bits());
  tag_ = h == 0 ? 1 : h;
}

CoxeterSystem CoxeterSystem::from_names(std::vector<std::string> names,
                                        const std::vector<std::pair<std::string, std::string>>& commuting_pairs) {
  auto index_of = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw InputError("unknown generator '" + n + "' in commuting pair");
    return gen(static_cast<std::size_t>(it - names.begin()));
  };
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  pairs.reserve(commuting_pairs.size());
  for (const auto& [a, b] : commuting_pairs) pairs.emplace_back(index_of(a), index_of(b));
  return CoxeterSystem(std::move(names), pairs);
}

const std::string& CoxeterSystem::name(GeneratorId g) const {
  check(g);
  return names_[g.index];
}

std::optional<GeneratorId> CoxeterSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return gen(i);
  return std::nullopt;
}

GeneratorSet CoxeterSystem::all() const {
  return GeneratorSet{names_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << names_.size()) - 1};
}

std::vector<GeneratorId> CoxeterSystem::generators() const { return all().members(); }

bool CoxeterSystem::finite() const {
  return std::all_of(centralizer_.begin(), centralizer_.end(), [&](GeneratorSet c) { return c == all(); });
}

std::optional<GeneratorId> CoxeterSystem::free_factor_generator() const {
  if (rank() < 2) return std::nullopt;
  for (auto s : generators()) {
    if (centralizer_[s.index] != GeneratorSet::of(s)) continue;
    const GeneratorSet rest = all() - GeneratorSet::of(s);
    bool rest_commutes = true;
    for (auto t : rest.members()) rest_commutes = rest_commutes && rest.subset_of(centralizer_[t.index]);
    if (rest_commutes) return s;
  }
  return std::nullopt;
}

std::vector<std::pair<GeneratorId, GeneratorId>> CoxeterSystem::commuting_pairs() const {
  std::vector<std::pair<GeneratorId, GeneratorId>> out;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (commutes(gen(i), gen(j))) out.emplace_back(gen(i), gen(j));
  return out;
}

CoxeterSystem CoxeterSystem::restrict_to(GeneratorSet subset) const {
  if (subset.empty() || !subset.subset_of(all())) throw InputError("invalid generator subset");
  const auto members = subset.members();
  std::vector<std::string> names;
  for (auto g : members) names.push_back(names_[g.index]);
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (commutes(members[i], members[j])) pairs.emplace_back(gen(i), gen(j));
  return CoxeterSystem(std::move(names), pairs);
}

Element CoxeterSystem::generator(GeneratorId g) const {
  check(g);
  return Element(tag_, {g});
}

void CoxeterSystem::check(GeneratorId g) const {
  if (g.index >= rank())
    throw InputError("generator index " + std::to_string(g.index) + " out of range for a system of rank " +
                     std::to_string(rank()));
}

void CoxeterSystem::check(const Element& e) const {
  if (e.system_tag() != tag_) throw InputError("element belongs to a different Coxeter system");
}

// ---- normal forms ------------------------------------------------------

Word lex_normal_form(const CoxeterSystem& sys, std::span<const GeneratorId> reduced) {
  const std::size_t n = reduced.size();
  Word out;
  out.reserve(n);
  std::vector<bool> used(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    GeneratorSet before;
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const GeneratorId l = reduced[i];
      if ((before & blockers(sys, l)).empty() && (best == n || l < reduced[best])) best = i;
      before.insert(l);
    }
    used[best] = true;
    out.push_back(reduced[best]);
  }
  return out;
}

bool is_reduced(const CoxeterSystem& sys, std::span<const GeneratorId> w) {
  Word nf;
  for (auto s : w) {
    sys.check(s);
    if (append_right(sys, nf, s) < 0) return false;
  }
  return true;
}

bool extends_normal_form(const CoxeterSystem& sys, std::span<const GeneratorId> w, GeneratorId s) {
  for (std::size_t i = w.size(); i-- > 0;) {
    const GeneratorId l = w[i];
    if (l == s) return false;
    if (!sys.commutes(l, s)) return true;
    if (l > s) return false;
  }
  return true;
}

Element normalize(const CoxeterSystem& sys, std::span<const GeneratorId> w) {
  Word nf;
  nf.reserve(w.size());
  for (auto s : w) {
    sys.check(s);
    append_right(sys, nf, s);
  }
  return sys.adopt_canonical(std::move(nf));
}

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b) {
  sys.check(a);
  sys.check(b);
  Word nf = a.word();
  for (auto s : b.word()) append_right(sys, nf, s);
  return sys.adopt_canonical(std::move(nf));
}

Element inverse(const CoxeterSystem& sys, const Element& a) {
  sys.check(a);
  Word rev(a.word().rbegin(), a.word().rend());
  return sys.adopt_canonical(lex_normal_form(sys, rev));
}

GeneratorProduct mult_gen(const CoxeterSystem& sys, const Element& a, GeneratorId s, Side side) {
  sys.check(a);
  sys.check(s);
  Word w = a.word();
  if (side == Side::right) {
    const int delta = append_right(sys, w, s);
    return {sys.adopt_canonical(std::move(w)), delta};
  }
  const int delta = prepend_left(sys, w, s);
  return {sys.adopt_canonical(lex_normal_form(sys, w)), delta};
}

GeneratorSet right_descents(const CoxeterSystem& sys, const Element& a) {
  sys.check(a);
  GeneratorSet after, out;
  const auto& w = a.word();
  for (std::size_t i = w.size(); i-- > 0;) {
    if ((after & blockers(sys, w[i])).empty()) out.insert(w[i]);
    after.insert(w[i]);
  }
  return out;
}

GeneratorSet left_descents(const CoxeterSystem& sys, const Element& a) {
  sys.check(a);
  GeneratorSet before, out;
  for (auto l : a.word()) {
    if ((before & blockers(sys, l)).empty()) out.insert(l);
    before.insert(l);
  }
  return out;
}

DescentSets descent_sets(const CoxeterSystem& sys, const Element& a) {
  return {left_descents(sys, a), right_descents(sys, a)};
}

GeneratorSet support(const Element& a) {
  GeneratorSet out;
  for (auto l : a.word()) out.insert(l);
  return out;
}

bool commutes_with_gen(const CoxeterSystem& sys, const Element& a, GeneratorId r) {
  sys.check(a);
  sys.check(r);
  return support(a).subset_of(sys.centralizer(r));
}

Element product_of(const CoxeterSystem& sys, GeneratorSet gens) {
  const auto members = gens.members();
  return normalize(sys, members);
}

Element regular_join(const CoxeterSystem& sys, const Element& v, const Element& w) {
  sys.check(v);
  sys.check(w);
  if (!sys.irreducible()) throw DomainError("regular_join requires an irreducible system");
  if (sys.finite()) throw DomainError("regular_join requires an infinite system");

  Element vk = v;
  Element u = sys.identity();
  auto extend = [&](GeneratorId s) {
    auto step = mult_gen(sys, vk, s, Side::right);
    if (step.delta != 1) throw InternalError("regular_join: length did not grow");
    vk = std::move(step.element);
    u = mult_gen(sys, u, s, Side::right).element;
  };

  // Absorb D_L(w) into the right descent set first.
  const GeneratorSet missing = left_descents(sys, w) - right_descents(sys, v);
  for (auto s : missing.members()) extend(s);
  // Then append every generator outside D_R(v'), so no descent of w can cancel.
  const GeneratorSet outside = sys.all() - right_descents(sys, vk);
  for (auto s : outside.members()) extend(s);

  const Element vuw = multiply(sys, multiply(sys, v, u), w);
  if (vuw.length() != v.length() + u.length() + w.length())
    throw InternalError("regular_join: length is not additive");
  return u;
}

// ---- Deletion / Exchange / Folding ---------------------------------------

ConditionReport check_conditions(const CoxeterSystem& sys, std::span<const GeneratorId> w, GeneratorId s,
                                 GeneratorId t) {
  sys.check(s);
  sys.check(t);
  ConditionReport r;
  const Element value = normalize(sys, w);
  const std::size_t n = w.size();

  auto without = [&](std::initializer_list<std::size_t> skip) {
    Word out;
    for (std::size_t k = 0; k < n; ++k)
      if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.push_back(w[k]);
    return out;
  };

  if (value.length() < n) {
    r.deletion_applicable = true;
    r.deletion_holds = false;
    for (std::size_t i = 0; i < n && !r.deletion_holds; ++i)
      for (std::size_t j = i + 1; j < n && !r.deletion_holds; ++j)
        if (normalize(sys, without({i, j})) == value) {
          r.deletion_holds = true;
          r.deletion_pair = std::make_pair(i + 1, j + 1);
        }
    return r;
  }

  // w is reduced from here on.
  Word sw{s};
  sw.insert(sw.end(), w.begin(), w.end());
  Word wt(w.begin(), w.end());
  wt.push_back(t);
  const bool sw_reduced = is_reduced(sys, sw);
  const bool wt_reduced = is_reduced(sys, wt);

  if (!sw_reduced) {
    r.exchange_left_applicable = true;
    r.exchange_left_holds = false;
    const Element target = normalize(sys, sw);
    for (std::size_t i = 0; i < n; ++i)
      if (normalize(sys, without({i})) == target) {
        r.exchange_left_holds = true;
        r.exchange_left_index = i + 1;
        break;
      }
  }
  if (!wt_reduced) {
    r.exchange_right_applicable = true;
    r.exchange_right_holds = false;
    const Element target = normalize(sys, wt);
    for (std::size_t i = 0; i < n; ++i)
      if (normalize(sys, without({i})) == target) {
        r.exchange_right_holds = true;
        r.exchange_right_index = i + 1;
        break;
      }
  }
  if (sw_reduced && wt_reduced) {
    r.folding_applicable = true;
    Word swt = sw;
    swt.push_back(t);
    const Element prod = normalize(sys, swt);
    r.folding_equal_branch = prod == value;
    r.folding_holds = r.folding_equal_branch || prod.length() == n + 2;
  }
  return r;
}

// ---- text ----------------------------------------------------------------

namespace {
bool single_char_names(const CoxeterSystem& sys) {
  return std::all_of(sys.names().begin(), sys.names().end(), [](const std::string& n) { return n.size() == 1; });
}
}  // namespace

std::string format_word(const CoxeterSystem& sys, std::span<const GeneratorId> w) {
  if (w.empty()) return "1";
  const bool compact = single_char_names(sys);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += '.';
    out += sys.name(w[i]);
  }
  return out;
}

std::string format_element(const CoxeterSystem& sys, const Element& e) { return format_word(sys, e.word()); }

Word parse_word(const CoxeterSystem& sys, std::string_view text) {
  Word out;
  const bool compact = single_char_names(sys);
  std::string token;
  auto flush = [&] {
    if (token.empty() || token == "1") {
      token.clear();
      return;
    }
    if (auto g = sys.find(token)) {
      out.push_back(*g);
    } else if (compact) {
      for (char c : token) {
        auto h = sys.find(std::string_view(&c, 1));
        if (!h) throw InputError("unknown generator '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
        out.push_back(*h);
      }
    } else {
      throw InputError("unknown generator '" + token + "' in word '" + std::string(text) + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ',')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

std::string format_set(const CoxeterSystem& sys, GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (auto g : set.members()) {
    if (!first) out += ", ";
    out += sys.name(g);
    first = false;
  }
  return out + "}";
}

}  // namespace racg
