#include "derange/scan.hpp"

#include <string>

#include "derange/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace derange {

namespace {

void tally(ElementScan& s, const Perm& g) {
  ++s.count;
  std::size_t fix = g.fixed_point_count();
  s.fix_sum += fix;
  OrderStat& st = s.by_order[g.order()];
  ++st.total;
  if (fix == 0) {
    ++st.deranged;
    ++s.derangement_count;
  }
}

void merge(ElementScan& into, const ElementScan& from) {
  into.count += from.count;
  into.fix_sum += from.fix_sum;
  into.derangement_count += from.derangement_count;
  for (const auto& [order, st] : from.by_order) {
    OrderStat& dst = into.by_order[order];
    dst.total += st.total;
    dst.deranged += st.deranged;
  }
}

} // namespace

ElementScan scan_elements_serial(const PermGroup& g, std::uint64_t cap) {
  ElementScan s;
  g.for_each_element([&](const Perm& x) { tally(s, x); }, cap);
  return s;
}

ElementScan scan_elements_parallel(const PermGroup& g, std::uint64_t cap) {
  std::uint64_t n = g.order();
  if (n > cap)
    throw cap_exceeded("group of order " + std::to_string(n) +
                       " is too large to enumerate (cap " + std::to_string(cap) +
                       ")");
  // split G along the right cosets of the first-level stabilizer: every
  // element is uniquely (stabilizer product) * (level-0 transversal element),
  // which makes the inner loop a flat product grid
  const std::uint64_t kSliceBudget = 1u << 22;
  bool sliced = g.chain_length() > 0 &&
                n / g.orbit_size(0) <= kSliceBudget / std::max<std::size_t>(
                                                          g.degree(), 1);
  ElementScan total;
#if defined(_OPENMP)
  if (sliced) {
    std::vector<Perm> stab = g.first_stabilizer_elements(cap);
    std::int64_t top = static_cast<std::int64_t>(g.orbit_size(0));
    #pragma omp parallel if (n > 4096)
    {
      ElementScan local;
      #pragma omp for schedule(static) nowait
      for (std::int64_t k = 0; k < top; ++k) {
        const Perm& u = g.transversal(0, static_cast<std::size_t>(k));
        for (const Perm& s : stab) tally(local, compose(s, u));
      }
      #pragma omp critical(derange_scan_merge)
      merge(total, local);
    }
    return total;
  }
  #pragma omp parallel if (n > 4096)
  {
    ElementScan local;
    #pragma omp for schedule(static) nowait
    for (std::int64_t flat = 0; flat < static_cast<std::int64_t>(n); ++flat)
      tally(local, g.element_at(static_cast<std::uint64_t>(flat)));
    #pragma omp critical(derange_scan_merge)
    merge(total, local);
  }
#else
  (void)sliced;
  for (std::uint64_t flat = 0; flat < n; ++flat)
    tally(total, g.element_at(flat));
#endif
  return total;
}

ElementScan scan_elements(const PermGroup& g, std::uint64_t cap, ScanMode mode) {
  switch (mode) {
    case ScanMode::Serial:
      return scan_elements_serial(g, cap);
    case ScanMode::Parallel:
      return scan_elements_parallel(g, cap);
    case ScanMode::Auto:
    default:
      return g.order() > 4096 ? scan_elements_parallel(g, cap)
                              : scan_elements_serial(g, cap);
  }
}

bool scans_equal(const ElementScan& a, const ElementScan& b) {
  if (a.count != b.count || a.fix_sum != b.fix_sum ||
      a.derangement_count != b.derangement_count)
    return false;
  if (a.by_order.size() != b.by_order.size()) return false;
  for (const auto& [order, st] : a.by_order) {
    auto it = b.by_order.find(order);
    if (it == b.by_order.end() || it->second.total != st.total ||
        it->second.deranged != st.deranged)
      return false;
  }
  return true;
}

std::vector<Perm> collect_derangements(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> out;
  g.for_each_element(
      [&](const Perm& x) {
        if (x.fixed_point_count() == 0) out.push_back(x);
      },
      cap);
  return out;
}

} // namespace derange
