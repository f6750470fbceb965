#include "derange/coset.hpp"

#include <algorithm>
#include <string>

#include "derange/errors.hpp"

namespace derange {

std::uint32_t CosetAction::coset_of(const Perm& x) const {
  auto it = index_of.find(subgroup.minimal_coset_rep(x));
  if (it == index_of.end())
    throw invalid_input("element does not lie in the parent group");
  return it->second;
}

Perm CosetAction::induced_image(const Perm& g) const {
  std::vector<Point> img(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    img[i] = coset_of(compose(reps[i], g));
  return Perm(std::move(img));
}

bool CosetAction::conjugates_into_subgroup(const Perm& x) const {
  for (const Perm& r : reps)
    if (subgroup.contains(conjugated(x, r))) return true;
  return false;
}

CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& h_gens,
                         std::uint64_t index_cap) {
  PermGroup h(g.degree(), h_gens);
  for (const Perm& s : h_gens)
    if (!g.contains(s))
      throw invalid_input("subgroup generator lies outside the parent group");
  if (h.order() == g.order())
    throw invalid_input("subgroup must be proper for a coset action");
  std::uint64_t index = g.order() / h.order();
  if (index > index_cap)
    throw cap_exceeded("coset index " + std::to_string(index) +
                       " exceeds cap " + std::to_string(index_cap));

  CosetAction act;
  act.parent = g;
  act.subgroup = std::move(h);

  std::vector<Perm> reps;
  std::unordered_map<Perm, std::uint32_t, PermHash> seen;
  reps.push_back(Perm(g.degree()));
  seen.emplace(reps[0], 0);
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const Perm& s : g.generators()) {
      Perm c = act.subgroup.minimal_coset_rep(compose(reps[head], s));
      if (seen.emplace(c, 0).second) reps.push_back(std::move(c));
    }
  }
  if (reps.size() != index)
    throw std::logic_error("coset enumeration found " +
                           std::to_string(reps.size()) + " cosets, expected " +
                           std::to_string(index));
  std::sort(reps.begin(), reps.end());
  act.reps = std::move(reps);
  act.index_of.clear();
  for (std::uint32_t i = 0; i < act.reps.size(); ++i)
    act.index_of.emplace(act.reps[i], i);

  std::vector<Perm> ind_gens;
  ind_gens.reserve(g.generators().size());
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(act.reps.size());
    for (std::size_t i = 0; i < act.reps.size(); ++i)
      img[i] = act.index_of.at(act.subgroup.minimal_coset_rep(compose(act.reps[i], s)));
    ind_gens.push_back(Perm(std::move(img)));
  }
  act.induced = PermGroup(act.reps.size(), std::move(ind_gens));
  return act;
}

} // namespace derange
