#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace derange {

using Point = std::uint32_t;

/// A permutation of {0..n-1}, stored as its image table.
///
/// Points act on the right: the image of i under g is g[i], and products
/// apply left to right, so (a*b)[i] = b[a[i]].
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);                 // identity
  explicit Perm(std::vector<Point> images);          // validates bijectivity

  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// degree() when the permutation is the identity.
  Point smallest_moved_point() const;
  /// lcm of cycle lengths.
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

  friend Perm compose(const Perm& a, const Perm& b);
  friend Perm inverse(const Perm& a);

private:
  struct unchecked_t {};
  Perm(unchecked_t, std::vector<Point> images) : img_(std::move(images)) {}

  std::vector<Point> img_;
};

/// Apply a, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// g * x * g^-1.
Perm conjugated(const Perm& x, const Perm& g);

std::string cycle_string(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

} // namespace derange
