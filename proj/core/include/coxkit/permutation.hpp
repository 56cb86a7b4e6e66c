#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxkit::perm {

using Point = std::uint16_t;

/// Bijection of {0..d-1}; printed 1-based in cycle notation.
/// Composition is right to left: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Validates that `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Cycle notation, 1-based: "(1 3)(2 4)(5 6)", "()" or "" for the identity.
  /// Points beyond the largest mentioned one are fixed up to `degree`.
  static Permutation parse(std::string_view text, std::size_t degree);
  /// Same, with degree = largest point mentioned.
  static Permutation parse(std::string_view text);
  static Permutation cycle(std::size_t degree, std::initializer_list<std::size_t> points_1based);

  std::size_t degree() const { return img_.size(); }
  Point operator()(std::size_t i) const { return img_[i]; }
  std::span<const Point> images() const { return img_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;
  std::size_t order() const;

  /// Cycle lengths including fixed points, sorted non-increasing.
  std::vector<std::size_t> cycle_type() const;

  /// Embeds into degree `degree` acting on points offset..offset+d-1.
  Permutation shifted(std::size_t offset, std::size_t degree) const;
  /// Restriction to a set of points it leaves invariant, renumbered in order.
  Permutation restricted(std::span<const std::size_t> points) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

 private:
  std::vector<Point> img_;
};

std::size_t hash_points(std::span<const Point> pts);

/// cycle_type of an element as a free function.
std::vector<std::size_t> cycle_type(const Permutation& g);

}  // namespace coxkit::perm

template <>
struct std::hash<coxkit::perm::Permutation> {
  std::size_t operator()(const coxkit::perm::Permutation& p) const { return coxkit::perm::hash_points(p.images()); }
};
