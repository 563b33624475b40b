#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

/// Generator sets are stored as 64-bit masks.
inline constexpr std::size_t kMaxGenerators = 64;

/// Position of a generator in the ordered generator list of its system.
/// Ordering follows the input order and drives the ShortLex normal form.
struct GeneratorId {
  std::uint8_t index = 0;

  friend constexpr auto operator<=>(GeneratorId, GeneratorId) = default;
};

constexpr GeneratorId gen(std::size_t i) { return GeneratorId{static_cast<std::uint8_t>(i)}; }

class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr GeneratorSet of(GeneratorId g) { return GeneratorSet{std::uint64_t{1} << g.index}; }
  static GeneratorSet of(std::initializer_list<GeneratorId> gs) {
    GeneratorSet out;
    for (auto g : gs) out.insert(g);
    return out;
  }

  constexpr bool contains(GeneratorId g) const { return (bits_ >> g.index) & 1U; }
  constexpr void insert(GeneratorId g) { bits_ |= std::uint64_t{1} << g.index; }
  constexpr void erase(GeneratorId g) { bits_ &= ~(std::uint64_t{1} << g.index); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Members in ascending generator order.
  std::vector<GeneratorId> members() const;

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet{a.bits_ | b.bits_}; }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet{a.bits_ & b.bits_}; }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A possibly non-reduced sequence of generators.
using Word = std::vector<GeneratorId>;

class CoxeterSystem;

/// A group element, stored as its ShortLex-least reduced word.
///
/// Elements are only produced by the operations in this header, so the
/// stored word is always canonical for the system that produced it.
/// Ordering is ShortLex (length first, then lexicographic).
class Element {
 public:
  Element() = default;

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  std::uint64_t system_tag() const { return tag_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  friend class CoxeterSystem;
  Element(std::uint64_t tag, Word w) : tag_(tag), word_(std::move(w)) {}

  std::uint64_t tag_ = 0;
  Word word_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Right-angled Coxeter system: ordered generators plus the commutation
/// relation. Pairs that are not listed as commuting have m(s,t) = infinity.
class CoxeterSystem {
 public:
  /// Throws InputError on duplicate names, self pairs, duplicate pairs or
  /// indices out of range.
  CoxeterSystem(std::vector<std::string> names,
                const std::vector<std::pair<GeneratorId, GeneratorId>>& commuting_pairs);

  static CoxeterSystem from_names(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& commuting_pairs);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId g) const;
  std::optional<GeneratorId> find(std::string_view name) const;

  /// m(s,t) = 2. False on the diagonal.
  bool commutes(GeneratorId s, GeneratorId t) const { return s != t && centralizer_[s.index].contains(t); }

  /// C(r): r together with every generator commuting with r.
  GeneratorSet centralizer(GeneratorId r) const { return centralizer_[r.index]; }

  /// Generators t with m(s,t) = infinity.
  GeneratorSet infinite_partners(GeneratorId s) const { return all() - centralizer_[s.index]; }

  GeneratorSet all() const;
  std::vector<GeneratorId> generators() const;

  /// Connected components of the non-commutation graph, ordered by smallest member.
  const std::vector<GeneratorSet>& components() const { return components_; }
  bool irreducible() const { return components_.size() <= 1; }

  /// W is finite iff all generators pairwise commute.
  bool finite() const;

  /// The generator of the Z2 factor when W is isomorphic to Z2 * Z2^k (k >= 1):
  /// one generator commuting with nothing, the remaining ones pairwise commuting.
  std::optional<GeneratorId> free_factor_generator() const;

  std::vector<std::pair<GeneratorId, GeneratorId>> commuting_pairs() const;

  /// Special subsystem on `subset`, generators renumbered in input order.
  CoxeterSystem restrict_to(GeneratorSet subset) const;

  /// Content fingerprint; elements remember the tag of the system that made them.
  std::uint64_t tag() const { return tag_; }

  Element identity() const { return Element(tag_, {}); }
  Element generator(GeneratorId g) const;

  void check(GeneratorId g) const;
  void check(const Element& e) const;

  /// Wraps a word that is already known to be canonical (no checks in release builds).
  Element adopt_canonical(Word w) const { return Element(tag_, std::move(w)); }

 private:
  std::vector<std::string> names_;
  std::vector<GeneratorSet> centralizer_;
  std::vector<GeneratorSet> components_;
  std::uint64_t tag_ = 0;
};

enum class Side { left, right };

// ---- words and normal forms -------------------------------------------

/// Canonical form of the group element spelled by `w`.
Element normalize(const CoxeterSystem& sys, std::span<const GeneratorId> w);

/// ShortLex-least rearrangement of a reduced word within its commutation class.
Word lex_normal_form(const CoxeterSystem& sys, std::span<const GeneratorId> reduced);

/// True if `w` has no deletion available (no occurrence of a letter is
/// followed, through commuting letters only, by the same letter).
bool is_reduced(const CoxeterSystem& sys, std::span<const GeneratorId> w);

/// w·s is reduced and in ShortLex normal form, given that `w` is.
bool extends_normal_form(const CoxeterSystem& sys, std::span<const GeneratorId> w, GeneratorId s);

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b);
Element inverse(const CoxeterSystem& sys, const Element& a);

struct GeneratorProduct {
  Element element;
  int delta = 0;  // +1 or -1
};

/// sa (Side::left) or as (Side::right) with the exact length change.
GeneratorProduct mult_gen(const CoxeterSystem& sys, const Element& a, GeneratorId s, Side side);

struct DescentSets {
  GeneratorSet left;
  GeneratorSet right;
};

DescentSets descent_sets(const CoxeterSystem& sys, const Element& a);
GeneratorSet left_descents(const CoxeterSystem& sys, const Element& a);
GeneratorSet right_descents(const CoxeterSystem& sys, const Element& a);

/// S(a), the generators occurring in any reduced expression.
GeneratorSet support(const Element& a);

/// a commutes with r, decided by S(a) being contained in C(r).
bool commutes_with_gen(const CoxeterSystem& sys, const Element& a, GeneratorId r);

/// An element u with |vuw| = |v| + |u| + |w|, built by the two-stage
/// descent-set construction. Requires an irreducible infinite system.
Element regular_join(const CoxeterSystem& sys, const Element& v, const Element& w);

/// Product of the given generators in ascending order, normalized.
Element product_of(const CoxeterSystem& sys, GeneratorSet gens);

// ---- Deletion / Exchange / Folding -----------------------------------

struct ConditionReport {
  // Deletion: applies when the word is not reduced.
  bool deletion_applicable = false;
  bool deletion_holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> deletion_pair;  // 1-based, i < j

  // Exchange: applies when the word is reduced and s·w (resp. w·t) is not.
  bool exchange_left_applicable = false;
  bool exchange_left_holds = true;
  std::optional<std::size_t> exchange_left_index;  // 1-based
  bool exchange_right_applicable = false;
  bool exchange_right_holds = true;
  std::optional<std::size_t> exchange_right_index;

  // Folding: applies when s·w and w·t are both reduced words.
  bool folding_applicable = false;
  bool folding_holds = true;
  bool folding_equal_branch = false;  // swt = w rather than swt reduced

  bool all_hold() const { return deletion_holds && exchange_left_holds && exchange_right_holds && folding_holds; }
};

ConditionReport check_conditions(const CoxeterSystem& sys, std::span<const GeneratorId> w, GeneratorId s,
                                 GeneratorId t);

// ---- text ------------------------------------------------------------

/// Generator names concatenated when every name is one character, dot
/// separated otherwise; the identity prints as "1".
std::string format_word(const CoxeterSystem& sys, std::span<const GeneratorId> w);
std::string format_element(const CoxeterSystem& sys, const Element& e);

/// Accepts whitespace, '.' or ',' separated names; with single-character
/// names a token may also be a run of names. "1" and "" mean the identity.
Word parse_word(const CoxeterSystem& sys, std::string_view text);

std::string format_set(const CoxeterSystem& sys, GeneratorSet set);

}  // namespace racg
