#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "derange/matrix.hpp"
#include "derange/perm_group.hpp"
#include "derange/scan.hpp"

namespace derange {

/// An affine pair (H, V): a matrix group H <= GL_k(p) acting on V = (Z_p)^k.
/// The semidirect product G = H |x V acts on V by v -> v*t + w.
///
/// H is cached as an explicit element list (closure of the generators).
class AffinePair {
public:
  static constexpr std::uint64_t kDefaultHCap = 1'000'000;

  AffinePair(std::uint64_t p, unsigned k, std::vector<Mat> h_generators,
             std::uint64_t h_cap = kDefaultHCap);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t space_size() const { return vsize_; }  // p^k
  const GfPtr& field() const { return field_; }
  const std::vector<Mat>& h_generators() const { return h_gens_; }
  const std::vector<Mat>& h_elements() const { return h_elements_; }
  std::uint64_t h_order() const { return h_elements_.size(); }
  std::uint64_t group_order() const { return h_order() * vsize_; }
  bool h_contains(const Mat& m) const;

  /// Exact: spins every 1-dimensional subspace.
  bool module_irreducible() const;

  // vector index <-> coordinates; coordinate 0 is the least significant
  // base-p digit
  std::uint64_t index_of(const Vec& v) const;
  Vec vector_at(std::uint64_t idx) const;

private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t vsize_;
  GfPtr field_;
  std::vector<Mat> h_gens_;
  std::vector<Mat> h_elements_;
  mutable std::optional<bool> irreducible_;
};

/// Semidirect element (t, v): the map x -> x*t + v.
struct AffineEl {
  Mat t;
  Vec v;
};
AffineEl affine_mul(const AffineEl& a, const AffineEl& b);
bool affine_is_identity(const AffineEl& a);
/// Order by repeated multiplication.
std::uint64_t affine_order(const AffineEl& a);

/// Basis of [V, t] = image of t - 1.
std::vector<Vec> commutator_image(const Mat& t, const AffinePair& pair);

struct AffineDerangements {
  std::uint64_t count = 0;
  std::map<std::uint64_t, std::uint64_t> order_counts;
  std::vector<std::uint64_t> order_set;  // ascending
};
/// Derangement tally via the coset formula {t v : t in H, v outside [V,t]}.
AffineDerangements affine_derangements(const AffinePair& pair,
                                       ScanMode mode = ScanMode::Auto);
/// The derangements themselves (for small pairs).
std::vector<AffineEl> affine_derangement_elements(const AffinePair& pair);

struct SemiregularResult {
  bool semiregular = false;
  std::optional<Mat> counterexample;  // an r'-element with a fixed vector
};
/// (H, V) is r'-semiregular iff no nontrivial element of order coprime to r
/// fixes a nonzero vector.
SemiregularResult is_rprime_semiregular(const AffinePair& pair,
                                        std::uint64_t r);

struct AffineStar {
  bool holds = false;
  std::optional<std::uint64_t> r;
};
/// Criterion for the affine group: holds iff (H, V) is p'-semiregular, and
/// then r = p. Requires an irreducible module.
AffineStar star_property_affine(const AffinePair& pair);

/// Every stabilizer of a nonzero vector in H is an r-group.
bool two_point_stabilizer_check(const AffinePair& pair, std::uint64_t r);

struct Lemma52Check {
  bool star = false;          // all derangement orders are r-powers
  bool stabilizers = false;   // vector stabilizers are r-groups
  bool semiregular = false;   // r'-semiregularity
};
Lemma52Check lemma52_check(const AffinePair& pair, std::uint64_t r);

struct SylowReduction {
  std::vector<Mat> k_generators;  // Sylow p-subgroup K of H
  std::uint64_t k_order = 1;
  std::uint64_t p_order = 1;      // |P| = |K| p^k
  PermGroup p_action;             // P acting on P/K, degree p^k
  std::vector<std::uint64_t> e_k_p;  // derangement orders of P on P/K
};
/// P = K |x V for a Sylow p-subgroup K of H; requires the star property.
SylowReduction sylow_reduction(const AffinePair& pair);

struct ExponentCriterion {
  bool e_equals_r = false;       // every derangement has order exactly p
  bool two_point_ok = false;     // vector stabilizers are p-groups
  std::uint64_t sylow_exponent = 1;
  bool criterion_holds = false;  // two_point_ok and exponent == p
};
ExponentCriterion exponent_criterion(const AffinePair& pair);

/// Faithful action of H |x V on the p^k vectors.
PermGroup as_permutation_group(const AffinePair& pair,
                               std::uint64_t degree_cap = 10'000);

/// Sylow r-subgroup of H as matrices (via the action on nonzero vectors).
std::vector<Mat> sylow_of_h(const AffinePair& pair, std::uint64_t r);

} // namespace derange
