#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "derange/perm.hpp"
#include "derange/perm_group.hpp"

namespace derange {

/// Action of a group on the right cosets of a subgroup by right
/// multiplication. Cosets are labelled by their lexicographically least
/// element; labels are sorted, so coset 0 is the subgroup itself.
struct CosetAction {
  PermGroup parent;
  PermGroup subgroup;
  std::vector<Perm> reps;   // canonical minimal representatives, sorted
  PermGroup induced;        // on reps.size() points

  std::uint32_t coset_of(const Perm& x) const;
  Perm induced_image(const Perm& g) const;
  /// True iff some conjugate of x lies in the subgroup, i.e. x fixes a coset.
  bool conjugates_into_subgroup(const Perm& x) const;

  std::unordered_map<Perm, std::uint32_t, PermHash> index_of;
};

CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& h_gens,
                         std::uint64_t index_cap = 100'000);

} // namespace derange
