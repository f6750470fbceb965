#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "derange/perm.hpp"
#include "derange/perm_group.hpp"

namespace derange {

/// Per-element-order tallies collected over a full element enumeration.
struct OrderStat {
  std::uint64_t total = 0;     // elements of this order
  std::uint64_t deranged = 0;  // of which fixed-point-free
};

struct ElementScan {
  std::uint64_t count = 0;              // elements visited (= group order)
  std::uint64_t fix_sum = 0;            // sum of fixed-point counts
  std::uint64_t derangement_count = 0;  // fixed-point-free elements
  std::map<std::uint64_t, OrderStat> by_order;
};

enum class ScanMode { Auto, Serial, Parallel };

/// Reference implementation: plain depth-first walk of the transversal
/// products.
ElementScan scan_elements_serial(const PermGroup& g,
                                 std::uint64_t cap = PermGroup::kDefaultEnumCap);

/// OpenMP kernel: the flat element index range is split across threads and
/// each element is decoded independently. Falls back to the same loop run
/// serially when built without OpenMP.
ElementScan scan_elements_parallel(const PermGroup& g,
                                   std::uint64_t cap = PermGroup::kDefaultEnumCap);

ElementScan scan_elements(const PermGroup& g,
                          std::uint64_t cap = PermGroup::kDefaultEnumCap,
                          ScanMode mode = ScanMode::Auto);

bool scans_equal(const ElementScan& a, const ElementScan& b);

/// The fixed-point-free elements themselves (serial; intended for groups
/// small enough to hold the set in memory).
std::vector<Perm> collect_derangements(const PermGroup& g,
                                       std::uint64_t cap = PermGroup::kDefaultEnumCap);

} // namespace derange
