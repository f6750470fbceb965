#include "derange/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "derange/errors.hpp"

namespace derange {

namespace {

bool is_small_prime(std::uint64_t r) {
  if (r < 2) return false;
  for (std::uint64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) return false;
  return true;
}

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw invalid_input("generator degree " + std::to_string(g.degree()) +
                          " does not match group degree " +
                          std::to_string(degree_));
  rebuild_canonical(gens_);
}

std::size_t PermGroup::tag_of(const Perm& g) const {
  std::size_t t = 0;
  while (t < base_.size() && g[base_[t]] == base_[t]) ++t;
  return t;
}

void PermGroup::recompute_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit.clear();
  lv.transversal.clear();
  lv.position.assign(degree_, -1);
  lv.orbit.push_back(lv.base_point);
  lv.transversal.push_back(Perm(degree_));
  lv.position[lv.base_point] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point q = lv.orbit[head];
    for (const StrongGen& sg : sgens_) {
      if (sg.tag < i) continue;
      Point r = sg.perm[q];
      if (lv.position[r] < 0) {
        lv.position[r] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(r);
        lv.transversal.push_back(compose(lv.transversal[head], sg.perm));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift_from(Perm g, std::size_t level) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    Point p = g[levels_[i].base_point];
    std::int32_t pos = levels_[i].position[p];
    if (pos < 0) return {std::move(g), i};
    g = compose(g, inverse(levels_[i].transversal[pos]));
  }
  return {std::move(g), levels_.size()};
}

Perm PermGroup::sift(const Perm& g) const { return sift_from(g, 0).first; }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw invalid_input("membership test: degree mismatch");
  return sift_from(g, 0).first.is_identity();
}

void PermGroup::build(const std::vector<Perm>& input,
                      std::vector<Point> prescribed) {
  base_.clear();
  sgens_.clear();
  levels_.clear();

  for (Point p : prescribed) {
    base_.push_back(p);
    Level lv;
    lv.base_point = p;
    levels_.push_back(std::move(lv));
  }

  auto adjoin = [&](Perm r) {
    if (r.is_identity()) return;
    std::size_t t = tag_of(r);
    if (t == base_.size()) {
      Point np = r.smallest_moved_point();
      base_.push_back(np);
      Level lv;
      lv.base_point = np;
      levels_.push_back(std::move(lv));
    }
    sgens_.push_back({std::move(r), t});
  };

  for (const Perm& g : input) adjoin(g);
  for (std::size_t i = 0; i < levels_.size(); ++i) recompute_level(i);

  if (!levels_.empty()) {
    // bottom-up verification of the Schreier generators; adjoin may grow
    // both sgens_ and levels_, so everything is indexed, never referenced
    std::size_t i = levels_.size() - 1;
    while (true) {
      recompute_level(i);
      bool grew = false;
      std::size_t orbit_count = levels_[i].orbit.size();
      std::size_t gen_count = sgens_.size();
      for (std::size_t k = 0; k < orbit_count && !grew; ++k) {
        for (std::size_t gi = 0; gi < gen_count && !grew; ++gi) {
          if (sgens_[gi].tag < i) continue;
          const Level& lv = levels_[i];
          Point p = lv.orbit[k];
          Point ps = sgens_[gi].perm[p];
          Perm schreier = compose(compose(lv.transversal[k], sgens_[gi].perm),
                                  inverse(lv.transversal[lv.position[ps]]));
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift_from(std::move(schreier), i + 1);
          (void)stop;
          if (!residue.is_identity()) {
            std::size_t before = levels_.size();
            adjoin(std::move(residue));
            std::size_t t = sgens_.back().tag;
            for (std::size_t j = before; j < levels_.size(); ++j)
              recompute_level(j);
            i = t;  // deepest level whose generating set grew
            grew = true;
          }
        }
      }
      if (grew) continue;
      if (i == 0) break;
      --i;
    }
  }

  order_ = 1;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    recompute_level(i);
    std::uint64_t s = levels_[i].orbit.size();
    if (order_ > std::numeric_limits<std::uint64_t>::max() / s)
      throw cap_exceeded("group order overflows 64 bits");
    order_ *= s;
  }
}

void PermGroup::rebuild_canonical(const std::vector<Perm>& input) {
  std::vector<Point> prescribed;
  while (true) {
    build(input, prescribed);
    bool fixed = true;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      // smallest point moved by the level-i strong generators
      Point m = static_cast<Point>(degree_);
      bool any = false;
      for (const StrongGen& sg : sgens_) {
        if (sg.tag < i) continue;
        any = true;
        m = std::min(m, sg.perm.smallest_moved_point());
      }
      if (!any) {
        // stabilizer is trivial from here on; drop vacuous levels
        if (levels_.size() > i) {
          levels_.resize(i);
          base_.resize(i);
          order_ = 1;
          for (std::size_t j = 0; j < levels_.size(); ++j)
            order_ *= levels_[j].orbit.size();
        }
        break;
      }
      if (m != base_[i]) {
        prescribed.assign(base_.begin(), base_.begin() + i);
        prescribed.push_back(m);
        fixed = false;
        break;
      }
    }
    if (fixed) return;
  }
}

bool PermGroup::is_transitive() const {
  if (degree_ <= 1) return true;
  return !levels_.empty() && levels_[0].orbit.size() == degree_ &&
         levels_[0].base_point == 0;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head) {
      for (const Perm& g : gens_) {
        Point r = g[orb[head]];
        if (!seen[r]) {
          seen[r] = true;
          orb.push_back(r);
        }
      }
    }
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive())
    throw invalid_input("primitivity is only defined for transitive groups");
  if (degree_ <= 2) return true;

  // minimal block system containing {0, a}, for each a
  std::vector<Point> parent(degree_);
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Point a = 1; a < degree_; ++a) {
    std::iota(parent.begin(), parent.end(), Point{0});
    std::vector<std::pair<Point, Point>> queue{{0, a}};
    parent[find(a)] = find(0);
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      for (const Perm& g : gens_) {
        Point gx = find(g[x]);
        Point gy = find(g[y]);
        if (gx != gy) {
          parent[gx] = gy;
          queue.emplace_back(g[x], g[y]);
        }
      }
    }
    std::size_t block_size = 0;
    Point root = find(0);
    for (Point x = 0; x < degree_; ++x)
      if (find(x) == root) ++block_size;
    if (block_size < degree_) return false;  // block_size > 1 by construction
  }
  return true;
}

PermGroup PermGroup::point_stabilizer(Point p) const {
  if (p >= degree_) throw invalid_input("point out of range");
  PermGroup scratch;
  scratch.degree_ = degree_;
  scratch.build(gens_, {p});
  std::vector<Perm> stab_gens;
  for (const StrongGen& sg : scratch.sgens_)
    if (sg.tag >= 1) stab_gens.push_back(sg.perm);
  return PermGroup(degree_, std::move(stab_gens));
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                 std::uint64_t cap) const {
  if (order_ > cap)
    throw cap_exceeded("group of order " + std::to_string(order_) +
                       " is too large to enumerate (cap " + std::to_string(cap) +
                       ")");
  if (levels_.empty()) {
    fn(Perm(degree_));
    return;
  }
  // depth-first over the chain; level 0 varies slowest
  std::function<void(std::size_t, const Perm&)> rec =
      [&](std::size_t level, const Perm& acc) {
        const Level& lv = levels_[level];
        for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
          Perm next = compose(acc, lv.transversal[k]);
          if (level == 0)
            fn(next);
          else
            rec(level - 1, next);
        }
      };
  rec(levels_.size() - 1, Perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  out.reserve(order_ <= cap ? order_ : 0);
  for_each_element([&](const Perm& g) { out.push_back(g); }, cap);
  return out;
}

Perm PermGroup::element_at(std::uint64_t flat) const {
  Perm acc(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::uint64_t s = levels_[i].orbit.size();
    std::uint64_t d = flat % s;
    flat /= s;
    acc = compose(acc, levels_[i].transversal[d]);
  }
  return acc;
}

std::vector<Perm> PermGroup::first_stabilizer_elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  if (levels_.size() <= 1) {
    out.push_back(Perm(degree_));
    return out;
  }
  std::uint64_t count = order_ / levels_[0].orbit.size();
  if (count > cap)
    throw cap_exceeded("stabilizer slice of size " + std::to_string(count) +
                       " is too large to enumerate (cap " +
                       std::to_string(cap) + ")");
  out.reserve(count);
  std::function<void(std::size_t, const Perm&)> rec =
      [&](std::size_t level, const Perm& acc) {
        const Level& lv = levels_[level];
        for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
          Perm next = compose(acc, lv.transversal[k]);
          if (level == 1)
            out.push_back(std::move(next));
          else
            rec(level - 1, next);
        }
      };
  rec(levels_.size() - 1, Perm(degree_));
  return out;
}

std::uint64_t PermGroup::exponent(std::uint64_t cap) const {
  std::uint64_t e = 1;
  for_each_element(
      [&](const Perm& g) {
        std::uint64_t o = g.order();
        std::uint64_t d = std::gcd(e, o);
        std::uint64_t f = o / d;
        if (e > std::numeric_limits<std::uint64_t>::max() / f)
          throw cap_exceeded("group exponent overflows 64 bits");
        e *= f;
      },
      cap);
  return e;
}

Perm PermGroup::minimal_coset_rep(const Perm& x) const {
  if (x.degree() != degree_) throw invalid_input("coset rep: degree mismatch");
  Perm tail = x;
  for (const Level& lv : levels_) {
    std::size_t best = 0;
    Point best_val = tail[lv.orbit[0]];
    for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
      Point v = tail[lv.orbit[k]];
      if (v < best_val) {
        best_val = v;
        best = k;
      }
    }
    if (best != 0) tail = compose(lv.transversal[best], tail);
  }
  return tail;
}

PermGroup normalizer(const PermGroup& g, const std::vector<Perm>& s_gens,
                     std::uint64_t cap) {
  PermGroup s(g.degree(), s_gens);
  std::vector<Perm> found;
  PermGroup current(g.degree());
  g.for_each_element(
      [&](const Perm& x) {
        Perm xi = inverse(x);
        for (const Perm& sg : s_gens)
          if (!s.contains(compose(compose(xi, sg), x))) return;
        if (!current.contains(x)) {
          found.push_back(x);
          current = PermGroup(g.degree(), found);
        }
      },
      cap);
  return current;
}

PermGroup centralizer(const PermGroup& g, const Perm& x, std::uint64_t cap) {
  std::vector<Perm> found;
  PermGroup current(g.degree());
  g.for_each_element(
      [&](const Perm& y) {
        if (compose(y, x) != compose(x, y)) return;
        if (!current.contains(y)) {
          found.push_back(y);
          current = PermGroup(g.degree(), found);
        }
      },
      cap);
  return current;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t r,
                         std::uint64_t cap) {
  if (!is_small_prime(r)) throw invalid_input("sylow: r must be prime");
  if (g.order() % r != 0)
    throw invalid_input("sylow: " + std::to_string(r) +
                        " does not divide the group order " +
                        std::to_string(g.order()));
  std::uint64_t target = 1;
  for (std::uint64_t m = g.order(); m % r == 0; m /= r) target *= r;

  // seed with the r-part of the first element of order divisible by r
  Perm seed;
  bool have_seed = false;
  g.for_each_element(
      [&](const Perm& x) {
        if (have_seed) return;
        std::uint64_t o = x.order();
        if (o % r != 0) return;
        std::uint64_t cof = o;
        while (cof % r == 0) cof /= r;
        Perm y = x;
        for (std::uint64_t i = 1; i < cof; ++i) y = compose(y, x);
        seed = std::move(y);
        have_seed = true;
      },
      cap);
  PermGroup p(g.degree(), {seed});

  while (p.order() < target) {
    PermGroup n = normalizer(g, p.generators(), cap);
    bool grown = false;
    std::vector<Perm> next_gens = p.generators();
    n.for_each_element(
        [&](const Perm& z) {
          if (grown) return;
          std::uint64_t o = z.order();
          if (o == 1) return;
          std::uint64_t t = o;
          while (t % r == 0) t /= r;
          if (t != 1) return;       // not an r-element
          if (p.contains(z)) return;
          next_gens.push_back(z);
          grown = true;
        },
        cap);
    if (!grown)
      throw std::logic_error("sylow climb stalled below the full r-part");
    p = PermGroup(g.degree(), next_gens);
  }
  return p;
}

} // namespace derange
