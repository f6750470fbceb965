#include "derange/derangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "derange/errors.hpp"

namespace derange {

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw invalid_input("zero denominator");
  std::uint64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

bool is_prime_power_u64(std::uint64_t o, std::uint64_t* prime) {
  if (o < 2) return false;
  for (std::uint64_t d = 2; d * d <= o; ++d) {
    if (o % d == 0) {
      while (o % d == 0) o /= d;
      if (o != 1) return false;
      if (prime) *prime = d;
      return true;
    }
  }
  if (prime) *prime = o;
  return true;
}

namespace {

void require_transitive(const PermGroup& g) {
  if (g.degree() < 2)
    throw invalid_input("derangement analysis requires degree at least 2");
  if (!g.is_transitive())
    throw invalid_input("derangement analysis requires a transitive group");
}

} // namespace

std::vector<std::uint64_t> order_set(const PermGroup& g, std::uint64_t cap,
                                     ScanMode mode) {
  require_transitive(g);
  ElementScan s = scan_elements(g, cap, mode);
  std::vector<std::uint64_t> out;
  for (const auto& [o, st] : s.by_order)
    if (st.deranged > 0) out.push_back(o);
  return out;  // map iteration is ascending
}

std::vector<Perm> derangement_set(const PermGroup& g, std::uint64_t cap) {
  require_transitive(g);
  return collect_derangements(g, cap);
}

StarResult star_from_orders(const std::vector<std::uint64_t>& orders) {
  StarResult out;
  out.order_set = orders;
  if (orders.empty())
    throw std::logic_error("transitive group with no derangements");
  // common prime: every order must be a power of one fixed r
  std::optional<std::uint64_t> r;
  bool holds = true;
  for (std::uint64_t o : orders) {
    std::uint64_t p = 0;
    if (!is_prime_power_u64(o, &p)) {
      holds = false;
      break;
    }
    if (!r)
      r = p;
    else if (*r != p) {
      holds = false;
      break;
    }
  }
  if (holds) {
    out.holds = true;
    out.r = r;
    return out;
  }
  for (std::size_t i = 0; i < orders.size() && !out.coprime_witness; ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (orders[i] > 1 && orders[j] > 1 &&
          std::gcd(orders[i], orders[j]) == 1) {
        out.coprime_witness = {orders[i], orders[j]};
        break;
      }
  for (std::uint64_t o : orders)
    if (!is_prime_power_u64(o)) {
      out.non_prime_power_witness = o;
      break;
    }
  return out;
}

StarResult star_property(const PermGroup& g, std::uint64_t cap, ScanMode mode) {
  return star_from_orders(order_set(g, cap, mode));
}

bool is_elusive(const PermGroup& g, std::uint64_t cap) {
  for (std::uint64_t o : order_set(g, cap))
    if (is_prime_power_u64(o)) {
      std::uint64_t p = 0;
      is_prime_power_u64(o, &p);
      if (o == p) return false;  // prime-order derangement
    }
  return true;
}

bool is_two_covering(const PermGroup& g, const std::vector<Perm>& h_gens,
                     const std::vector<Perm>& k_gens, std::uint64_t cap) {
  PermGroup h(g.degree(), h_gens);
  PermGroup k(g.degree(), k_gens);
  if (h.order() >= g.order() || k.order() >= g.order())
    throw invalid_input("two-covering requires proper subgroups");
  for (const Perm& s : h_gens)
    if (!g.contains(s)) throw invalid_input("h generator outside the group");
  for (const Perm& s : k_gens)
    if (!g.contains(s)) throw invalid_input("k generator outside the group");

  // coset representatives give every conjugating element up to the subgroup
  auto reps_of = [&](const PermGroup& sub) {
    std::vector<Perm> reps{Perm(g.degree())};
    std::unordered_map<Perm, std::uint32_t, PermHash> seen;
    seen.emplace(reps[0], 0);
    for (std::size_t head = 0; head < reps.size(); ++head)
      for (const Perm& s : g.generators()) {
        Perm c = sub.minimal_coset_rep(compose(reps[head], s));
        if (seen.emplace(c, 0).second) reps.push_back(std::move(c));
      }
    return reps;
  };
  std::vector<Perm> h_reps = reps_of(h);
  std::vector<Perm> k_reps = reps_of(k);

  bool covered = true;
  g.for_each_element(
      [&](const Perm& x) {
        if (!covered) return;
        for (const Perm& r : h_reps)
          if (h.contains(conjugated(x, r))) return;
        for (const Perm& r : k_reps)
          if (k.contains(conjugated(x, r))) return;
        covered = false;
      },
      cap);
  return covered;
}

PrimeGraph prime_graph(const PermGroup& g, std::uint64_t cap) {
  ElementScan s = scan_elements(g, cap);
  PrimeGraph out;
  // pi(G) from the element orders (every prime divisor of |G| is the order
  // of some element, by Cauchy)
  std::vector<std::uint64_t> all_orders;
  for (const auto& [o, st] : s.by_order) {
    (void)st;
    all_orders.push_back(o);
  }
  for (std::uint64_t o : all_orders) {
    std::uint64_t m = o;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        if (std::find(out.primes.begin(), out.primes.end(), d) ==
            out.primes.end())
          out.primes.push_back(d);
        m /= d;
      }
    if (m > 1 && std::find(out.primes.begin(), out.primes.end(), m) ==
                     out.primes.end())
      out.primes.push_back(m);
  }
  std::sort(out.primes.begin(), out.primes.end());
  for (std::size_t i = 0; i < out.primes.size(); ++i)
    for (std::size_t j = i + 1; j < out.primes.size(); ++j) {
      std::uint64_t pq = out.primes[i] * out.primes[j];
      bool edge = false;
      for (std::uint64_t o : all_orders)
        if (o % pq == 0) {
          edge = true;
          break;
        }
      if (edge) out.edges.emplace_back(out.primes[i], out.primes[j]);
    }
  for (std::uint64_t p : out.primes) {
    bool touched = false;
    for (const auto& [a, b] : out.edges)
      if (a == p || b == p) touched = true;
    if (!touched) out.isolated.push_back(p);
  }
  return out;
}

CosetFixedPointResult coset_unique_fixed_point_check(
    const PermGroup& g, const std::vector<Perm>& n_gens, const Perm& coset_rep,
    std::uint64_t cap) {
  PermGroup n(g.degree(), n_gens);
  if (!n.is_transitive())
    throw invalid_input("coset check: the normal subgroup must be transitive");
  for (const Perm& s : n_gens)
    if (!g.contains(s))
      throw invalid_input("coset check: subgroup generator outside the group");
  if (!g.contains(coset_rep))
    throw invalid_input("coset check: representative outside the group");
  // normality
  for (const Perm& x : g.generators()) {
    Perm xi = inverse(x);
    for (const Perm& s : n_gens)
      if (!n.contains(compose(compose(xi, s), x)))
        throw invalid_input("coset check: subgroup is not normal");
  }
  // cyclic quotient generated by the image of coset_rep
  std::uint64_t index = g.order() / n.order();
  Perm acc = coset_rep;
  std::uint64_t image_order = 1;
  while (!n.contains(acc)) {
    acc = compose(acc, coset_rep);
    ++image_order;
    if (image_order > index)
      throw std::logic_error("coset order computation overran the index");
  }
  if (image_order != index)
    throw invalid_input(
        "coset check: quotient is not generated by the representative image");

  CosetFixedPointResult out;
  out.derangement_free = true;
  out.all_unique_fixed_point = true;
  n.for_each_element(
      [&](const Perm& x) {
        std::size_t fix = compose(x, coset_rep).fixed_point_count();
        if (fix == 0) out.derangement_free = false;
        if (fix != 1) out.all_unique_fixed_point = false;
      },
      cap);
  return out;
}

DerangementReport analyze_group(const PermGroup& g, std::uint64_t cap,
                                ScanMode mode) {
  require_transitive(g);
  DerangementReport rep;
  rep.degree = g.degree();
  rep.group_order = g.order();
  rep.transitive = true;
  rep.primitive = g.is_primitive();

  ElementScan s = scan_elements(g, cap, mode);
  rep.derangement_count = s.derangement_count;
  rep.delta = make_rational(s.derangement_count, s.count);
  for (const auto& [o, st] : s.by_order)
    if (st.deranged > 0) rep.order_set.push_back(o);
  rep.star = star_from_orders(rep.order_set);

  rep.elusive = true;
  for (std::uint64_t o : rep.order_set) {
    std::uint64_t p = 0;
    if (is_prime_power_u64(o, &p) && o == p) rep.elusive = false;
  }
  for (std::uint64_t o : rep.order_set)
    if (is_prime_power_u64(o)) {
      rep.fks_witness = o;
      break;
    }
  return rep;
}

} // namespace derange
