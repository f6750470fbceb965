#pragma once

// Test-only reference implementations, independent of the library's
// computation paths.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "derange/perm.hpp"

namespace oracles {

using derange::Perm;
using derange::PermHash;

/// Closure of the generators under composition, by breadth-first products.
inline std::vector<Perm> brute_closure(std::size_t degree,
                                       const std::vector<Perm>& gens,
                                       std::size_t cap = 2'000'000) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  Perm id(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = derange::compose(out[head], g);
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
        if (out.size() > cap) throw std::runtime_error("closure cap hit");
      }
    }
  }
  return out;
}

/// Derangements via the complement of the union of point-stabilizer
/// conjugates (requires full closure).
inline std::set<Perm> derangements_by_stabilizer_union(
    std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<Perm> all = brute_closure(degree, gens);
  std::set<Perm> stab_union;
  for (const Perm& h : all) {
    if (h[0] != 0) continue;  // point stabilizer of 0
    for (const Perm& g : all)
      stab_union.insert(derange::conjugated(h, g));
  }
  std::set<Perm> out;
  for (const Perm& x : all)
    if (!stab_union.count(x)) out.insert(x);
  return out;
}

} // namespace oracles
