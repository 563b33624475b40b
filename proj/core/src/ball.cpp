#include "racg/ball.hpp"

#include <algorithm>
#include <string>

#include "racg/error.hpp"

namespace racg {

namespace {

// Sphere n+1 from sphere n: every normal form of length n+1 is a normal
// form of length n followed by one letter, so each element arises exactly
// once and lexicographic order is preserved.
std::vector<Word> next_sphere(const CoxeterSystem& sys, const std::vector<Word>& sphere) {
  std::vector<Word> out;
  const auto gens = sys.generators();
  for (const auto& w : sphere) {
    for (auto s : gens) {
      if (!extends_normal_form(sys, w, s)) continue;
      Word next;
      next.reserve(w.size() + 1);
      next.assign(w.begin(), w.end());
      next.push_back(s);
      out.push_back(std::move(next));
    }
  }
  return out;
}

[[noreturn]] void over_capacity(std::size_t cap, std::size_t n) {
  throw CapacityError("ball enumeration exceeds the cap of " + std::to_string(cap) + " elements at length " +
                      std::to_string(n) + " (raise --max-ball or lower the radius)");
}

}  // namespace

std::optional<std::size_t> Ball::index_of(const Element& e) const {
  if (e.system_tag() != tag_ || e.length() > radius_) return std::nullopt;
  auto it = index_.find(e.word());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Element> Ball::sphere(std::size_t n) const {
  if (n > radius_) return {};
  return std::span<const Element>(elements_).subspan(offsets_[n], offsets_[n + 1] - offsets_[n]);
}

Ball ball(const CoxeterSystem& sys, std::size_t radius, std::size_t cap) {
  Ball b;
  b.radius_ = radius;
  b.tag_ = sys.tag();
  b.offsets_.push_back(0);
  std::vector<Word> sphere{Word{}};
  for (std::size_t n = 0;; ++n) {
    if (b.elements_.size() + sphere.size() > cap) over_capacity(cap, n);
    for (auto& w : sphere) {
      b.index_.emplace(w, b.elements_.size());
      b.elements_.push_back(sys.adopt_canonical(w));
    }
    b.offsets_.push_back(b.elements_.size());
    if (n == radius) break;
    sphere = next_sphere(sys, sphere);
  }
  return b;
}

std::vector<std::uint64_t> sphere_counts(const CoxeterSystem& sys, std::size_t n, std::size_t cap) {
  std::vector<std::uint64_t> counts;
  std::vector<Word> sphere{Word{}};
  std::size_t total = 0;
  for (std::size_t k = 0;; ++k) {
    total += sphere.size();
    if (total > cap) over_capacity(cap, k);
    counts.push_back(sphere.size());
    if (k == n) break;
    sphere = next_sphere(sys, sphere);
  }
  return counts;
}

}  // namespace racg
