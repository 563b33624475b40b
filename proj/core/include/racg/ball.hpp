#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "racg/coxeter.hpp"

namespace racg {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// All elements of length at most `radius`, in ShortLex order, with an index.
class Ball {
 public:
  std::size_t radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

  /// Elements of length exactly n (n <= radius).
  std::span<const Element> sphere(std::size_t n) const;
  /// Number of elements with length <= n.
  std::size_t prefix_size(std::size_t n) const { return offsets_[std::min(n, radius_) + 1]; }

 private:
  friend Ball ball(const CoxeterSystem&, std::size_t, std::size_t);
  std::size_t radius_ = 0;
  std::uint64_t tag_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> offsets_;  // sphere n occupies [offsets_[n], offsets_[n+1])
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Throws CapacityError when more than `cap` elements would be produced.
Ball ball(const CoxeterSystem& sys, std::size_t radius, std::size_t cap = kDefaultBallCap);

/// a_0..a_n, the number of elements of each length. Only two spheres are kept
/// in memory; `cap` bounds the running total.
std::vector<std::uint64_t> sphere_counts(const CoxeterSystem& sys, std::size_t n, std::size_t cap = kDefaultBallCap);

}  // namespace racg
