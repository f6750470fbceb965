#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derange/affine.hpp"
#include "derange/coset.hpp"
#include "derange/perm_group.hpp"

namespace derange::atlas {

enum class Flavor { PSL, PGL, GammaL };

/// Projective action on the q+1 points of the line: infinity first, then the
/// field elements in encoding order.
PermGroup projective_line_group(std::uint64_t q, Flavor flavor);

/// PSL3(q) on the q^2+q+1 projective points; supported q: 2,3,4,5,7.
PermGroup projective_plane_group(std::uint64_t q);

/// Generators of the stabilizer of the point at infinity inside the PSL
/// copy (the maximal parabolic).
std::vector<Perm> parabolic_subgroup(std::uint64_t q);
/// Generators of a torus normalizer inside the PSL copy: split is the
/// setwise stabilizer of {0, infinity}; nonsplit is the brute-force
/// normalizer of the first cyclic subgroup of order (q+1)/(2,q-1) in the
/// element stream.
std::vector<Perm> torus_normalizer_subgroup(std::uint64_t q, bool split);

/// Coset action of the chosen projective group on the torus normalizer
/// (for GammaL, on the normalizer in the extension of the PSL-level
/// subgroup).
CosetAction torus_normalizer_cosets(std::uint64_t q, Flavor flavor, bool split);

/// Coset action of GammaL2(q) on the normalizer of the PSL-level parabolic.
CosetAction parabolic_normalizer_cosets_gamma(std::uint64_t q);

/// Coset action of L2(7) on an S4 subgroup (the Klein-four normalizer).
CosetAction l2_7_on_s4();

PermGroup m11_degree11();
/// The 3-transitive action on 12 points, embedded as literal image tables.
PermGroup m11_degree12();
/// Re-derivation used to validate the embedded tables: coset action of the
/// degree-11 copy on an L2(11) subgroup found by deterministic search.
CosetAction m11_degree12_derived();

AffinePair agl1(std::uint64_t q);
AffinePair asl2(std::uint64_t p);
/// SL2(q) on its natural module, rewritten over the prime subfield.
AffinePair sl2_natural(std::uint64_t q);
AffinePair gl2_3_affine();  // negative control: GL2(3) on (Z_3)^2

PermGroup symmetric_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // on n points, order 2n

struct CatalogEntry {
  std::string name;
  std::string family;
  std::string action;
  std::uint64_t q = 0;
  std::uint64_t degree = 0;
  std::uint64_t order = 0;
  bool star_holds = false;
  std::uint64_t star_r = 0;                 // 0 when star fails
  std::vector<std::uint64_t> expected_orders;  // E(G) when known
};
const std::vector<CatalogEntry>& catalog();
/// Construct the permutation group a catalog entry describes.
PermGroup build_catalog_entry(const CatalogEntry& entry);

} // namespace derange::atlas
