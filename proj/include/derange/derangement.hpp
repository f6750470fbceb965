#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "derange/perm.hpp"
#include "derange/perm_group.hpp"
#include "derange/scan.hpp"

namespace derange {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(std::uint64_t num, std::uint64_t den);

struct StarResult {
  bool holds = false;
  std::optional<std::uint64_t> r;
  std::vector<std::uint64_t> order_set;  // E(G), ascending
  // failure evidence: two coprime orders when they exist, otherwise an
  // order that is not a prime power
  std::optional<std::pair<std::uint64_t, std::uint64_t>> coprime_witness;
  std::optional<std::uint64_t> non_prime_power_witness;
};

struct DerangementReport {
  std::size_t degree = 0;
  std::uint64_t group_order = 0;
  bool transitive = false;
  bool primitive = false;
  std::uint64_t derangement_count = 0;
  Rational delta;
  std::vector<std::uint64_t> order_set;
  StarResult star;
  bool elusive = false;
  std::optional<std::uint64_t> fks_witness;  // least prime-power order in E(G)
};

/// True iff o = p^k for some k >= 1; writes the prime when requested.
bool is_prime_power_u64(std::uint64_t o, std::uint64_t* prime = nullptr);

/// Distinct derangement orders, ascending. Requires transitivity.
std::vector<std::uint64_t> order_set(const PermGroup& g,
                                     std::uint64_t cap = PermGroup::kDefaultEnumCap,
                                     ScanMode mode = ScanMode::Auto);

/// The fixed-point-free elements. Requires transitivity.
std::vector<Perm> derangement_set(const PermGroup& g,
                                  std::uint64_t cap = PermGroup::kDefaultEnumCap);

StarResult star_property(const PermGroup& g,
                         std::uint64_t cap = PermGroup::kDefaultEnumCap,
                         ScanMode mode = ScanMode::Auto);
StarResult star_from_orders(const std::vector<std::uint64_t>& orders);

bool is_elusive(const PermGroup& g,
                std::uint64_t cap = PermGroup::kDefaultEnumCap);

/// True iff every element of g has a conjugate in <h_gens> or <k_gens>.
bool is_two_covering(const PermGroup& g, const std::vector<Perm>& h_gens,
                     const std::vector<Perm>& k_gens,
                     std::uint64_t cap = PermGroup::kDefaultEnumCap);

struct PrimeGraph {
  std::vector<std::uint64_t> primes;                           // pi(G)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q
  std::vector<std::uint64_t> isolated;
};
PrimeGraph prime_graph(const PermGroup& g,
                       std::uint64_t cap = PermGroup::kDefaultEnumCap);

struct CosetFixedPointResult {
  bool derangement_free = false;        // Ng disjoint from the derangements
  bool all_unique_fixed_point = false;  // every element of Ng fixes one point
};
/// For transitive normal <n_gens> with cyclic quotient generated by the
/// image of coset_rep: checks the coset N*coset_rep.
CosetFixedPointResult coset_unique_fixed_point_check(
    const PermGroup& g, const std::vector<Perm>& n_gens, const Perm& coset_rep,
    std::uint64_t cap = PermGroup::kDefaultEnumCap);

DerangementReport analyze_group(const PermGroup& g,
                                std::uint64_t cap = PermGroup::kDefaultEnumCap,
                                ScanMode mode = ScanMode::Auto);

} // namespace derange
