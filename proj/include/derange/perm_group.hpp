#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "derange/perm.hpp"

namespace derange {

/// A finite permutation group given by generators, with a base and strong
/// generating set built at construction time.
///
/// The base is canonical: base[i] is the smallest point moved by the
/// stabilizer of base[0..i-1], so base points ascend and coset-minimal
/// representatives can be computed by a greedy descent of the chain.
class PermGroup {
public:
  static constexpr std::uint64_t kDefaultEnumCap = 20'000'000;

  PermGroup() = default;  // trivial group on 0 points
  explicit PermGroup(std::size_t degree, std::vector<Perm> generators = {});

  std::size_t degree() const { return degree_; }
  /// The generators exactly as supplied.
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const { return order_; }
  const std::vector<Point>& base() const { return base_; }
  std::size_t chain_length() const { return levels_.size(); }
  std::size_t orbit_size(std::size_t level) const {
    return levels_[level].orbit.size();
  }
  /// Transversal element carrying base[level] to the k-th orbit point.
  const Perm& transversal(std::size_t level, std::size_t k) const {
    return levels_[level].transversal[k];
  }

  bool contains(const Perm& g) const;
  /// Residue of g after sifting through the stabilizer chain.
  Perm sift(const Perm& g) const;

  bool is_transitive() const;
  /// Minimal-block test; throws invalid_input on intransitive input.
  bool is_primitive() const;
  std::vector<std::vector<Point>> orbits() const;

  PermGroup point_stabilizer(Point p) const;

  /// Visit every element exactly once (products over the transversals).
  /// Throws cap_exceeded when order() > cap.
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t cap = kDefaultEnumCap) const;
  std::vector<Perm> elements(std::uint64_t cap = kDefaultEnumCap) const;
  /// Element for a flat index in [0, order()): mixed-radix decode over the
  /// transversal tables. Used by the parallel scan kernels.
  Perm element_at(std::uint64_t flat) const;
  /// The elements of the first-level stabilizer (products over the
  /// transversals of levels 1..). Every group element is uniquely such a
  /// product composed with a level-0 transversal element.
  std::vector<Perm> first_stabilizer_elements(std::uint64_t cap = kDefaultEnumCap) const;

  /// lcm of all element orders. Enumerates, so the cap applies.
  std::uint64_t exponent(std::uint64_t cap = kDefaultEnumCap) const;

  /// Lexicographically least element of the right coset (*this)*x.
  Perm minimal_coset_rep(const Perm& x) const;

private:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;              // discovery order; orbit[0] = base_point
    std::vector<Perm> transversal;         // aligned with orbit
    std::vector<std::int32_t> position;    // point -> orbit index, -1 if absent
  };
  struct StrongGen {
    Perm perm;
    std::size_t tag;  // number of leading base points fixed
  };

  void build(const std::vector<Perm>& input, std::vector<Point> prescribed);
  void rebuild_canonical(const std::vector<Perm>& input);
  void recompute_level(std::size_t i);
  std::size_t tag_of(const Perm& g) const;
  std::pair<Perm, std::size_t> sift_from(Perm g, std::size_t level) const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<StrongGen> sgens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Exact normalizer of <s_gens> in g by filtering the element stream.
PermGroup normalizer(const PermGroup& g, const std::vector<Perm>& s_gens,
                     std::uint64_t cap = PermGroup::kDefaultEnumCap);

/// Exact centralizer of x in g.
PermGroup centralizer(const PermGroup& g, const Perm& x,
                      std::uint64_t cap = PermGroup::kDefaultEnumCap);

/// Sylow r-subgroup by normalizer climbing from a cyclic r-subgroup.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t r,
                         std::uint64_t cap = PermGroup::kDefaultEnumCap);

} // namespace derange
