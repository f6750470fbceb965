#include "derange/atlas.hpp"

#include <algorithm>
#include <string>

#include "derange/errors.hpp"
#include "derange/gf.hpp"

namespace derange::atlas {

namespace {

// P^1(F_q): point 0 is (1:0) = infinity, point 1+x is (x:1)
struct Line {
  GfPtr F;
  std::uint64_t q;

  explicit Line(std::uint64_t qq) {
    std::uint64_t p;
    unsigned f;
    if (!prime_power_decompose(qq, &p, &f))
      throw invalid_input("projective group: q = " + std::to_string(qq) +
                          " is not a prime power");
    F = Gf::make(p, f);
    q = qq;
  }

  Perm perm_of_matrix(Gf::El a, Gf::El b, Gf::El c, Gf::El d) const {
    std::vector<Point> img(q + 1);
    // infinity = (1:0) -> (a : b)
    img[0] = b == F->zero() ? 0 : static_cast<Point>(1 + F->mul(a, F->inv(b)));
    for (std::uint64_t x = 0; x < q; ++x) {
      Gf::El nx = F->add(F->mul(static_cast<Gf::El>(x), a), c);
      Gf::El ny = F->add(F->mul(static_cast<Gf::El>(x), b), d);
      img[1 + x] = ny == F->zero()
                       ? 0
                       : static_cast<Point>(1 + F->mul(nx, F->inv(ny)));
    }
    return Perm(std::move(img));
  }

  Perm frobenius_perm() const {
    std::vector<Point> img(q + 1);
    img[0] = 0;
    for (std::uint64_t x = 0; x < q; ++x)
      img[1 + x] = static_cast<Point>(1 + F->frobenius(static_cast<Gf::El>(x)));
    return Perm(std::move(img));
  }
};

std::vector<Perm> projective_line_gens(const Line& line, Flavor flavor) {
  const Gf& F = *line.F;
  std::vector<Perm> gens;
  // SL2 generators: upper transvection, Weyl element, torus
  gens.push_back(line.perm_of_matrix(F.one(), F.zero(), F.one(), F.one()));
  gens.push_back(
      line.perm_of_matrix(F.zero(), F.neg(F.one()), F.one(), F.zero()));
  if (line.q > 3) {
    Gf::El g = F.generator();
    gens.push_back(line.perm_of_matrix(g, F.zero(), F.zero(), F.inv(g)));
  }
  if (flavor == Flavor::PGL || flavor == Flavor::GammaL) {
    if (line.q > 2) {
      Gf::El g = F.generator();
      gens.push_back(line.perm_of_matrix(g, F.zero(), F.zero(), F.one()));
    }
  }
  if (flavor == Flavor::GammaL && F.f() > 1)
    gens.push_back(line.frobenius_perm());
  std::vector<Perm> out;
  for (Perm& p : gens)
    if (!p.is_identity()) out.push_back(std::move(p));
  return out;
}

} // namespace

PermGroup projective_line_group(std::uint64_t q, Flavor flavor) {
  if (q < 2 || q > 128)
    throw invalid_input("projective line groups supported for 2 <= q <= 128");
  Line line(q);
  return PermGroup(q + 1, projective_line_gens(line, flavor));
}

std::vector<Perm> parabolic_subgroup(std::uint64_t q) {
  // stabilizer of infinity: lower-triangular transvections and the torus
  Line line(q);
  const Gf& F = *line.F;
  std::vector<Perm> gens;
  for (unsigned i = 0; i < F.f(); ++i) {
    Gf::El lambda = F.f() == 1 ? F.one() : F.pow(F.generator(), i);
    gens.push_back(line.perm_of_matrix(F.one(), F.zero(), lambda, F.one()));
  }
  if (q > 3) {
    Gf::El g = F.generator();
    gens.push_back(line.perm_of_matrix(g, F.zero(), F.zero(), F.inv(g)));
  }
  std::vector<Perm> out;
  for (Perm& p : gens)
    if (!p.is_identity()) out.push_back(std::move(p));
  return out;
}

std::vector<Perm> torus_normalizer_subgroup(std::uint64_t q, bool split) {
  PermGroup g = projective_line_group(q, Flavor::PSL);
  if (split) {
    // setwise stabilizer of {0, infinity} = points 1 and 0
    std::vector<Perm> found;
    PermGroup current(g.degree());
    g.for_each_element([&](const Perm& x) {
      bool stab = (x[0] == 0 && x[1] == 1) || (x[0] == 1 && x[1] == 0);
      if (!stab) return;
      if (!current.contains(x)) {
        found.push_back(x);
        current = PermGroup(g.degree(), found);
      }
    });
    return current.generators();
  }
  std::uint64_t torus_order = (q + 1) / (q % 2 == 0 ? 1 : 2);
  Perm seed;
  bool have = false;
  g.for_each_element([&](const Perm& x) {
    if (!have && x.order() == torus_order) {
      seed = x;
      have = true;
    }
  });
  if (!have)
    throw std::logic_error("no generator of the nonsplit torus was found");
  PermGroup n = normalizer(g, {seed});
  return n.generators();
}

CosetAction torus_normalizer_cosets(std::uint64_t q, Flavor flavor,
                                    bool split) {
  PermGroup g = projective_line_group(q, flavor);
  std::vector<Perm> sub = torus_normalizer_subgroup(q, split);
  if (flavor == Flavor::PSL) return coset_action(g, sub);
  PermGroup n = normalizer(g, sub);
  return coset_action(g, n.generators());
}

CosetAction parabolic_normalizer_cosets_gamma(std::uint64_t q) {
  PermGroup g = projective_line_group(q, Flavor::GammaL);
  PermGroup n = normalizer(g, parabolic_subgroup(q));
  return coset_action(g, n.generators());
}

CosetAction l2_7_on_s4() {
  PermGroup g = projective_line_group(7, Flavor::PSL);
  // N(V4) = S4: find two commuting involutions generating a Klein subgroup
  std::vector<Perm> invs;
  g.for_each_element([&](const Perm& x) {
    if (x.order() == 2) invs.push_back(x);
  });
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t j = i + 1; j < invs.size(); ++j) {
      if (compose(invs[i], invs[j]) != compose(invs[j], invs[i])) continue;
      PermGroup v4(g.degree(), {invs[i], invs[j]});
      if (v4.order() != 4) continue;
      PermGroup n = normalizer(g, v4.generators());
      if (n.order() == 24) return coset_action(g, n.generators());
    }
  throw std::logic_error("no S4 subgroup located in L2(7)");
}

PermGroup m11_degree11() {
  // classical Mathieu generators: an 11-cycle and (3,7,11,8)(4,10,5,6),
  // shifted to 0-based points
  Perm a = Perm::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  Perm b = Perm::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}});
  return PermGroup(11, {a, b});
}

CosetAction m11_degree12_derived() {
  PermGroup g = m11_degree11();
  // L2(11) has index 12; it is generated by any 11-element together with a
  // suitable involution, and every such pair generates L2(11) or all of M11
  Perm x11;
  bool have = false;
  g.for_each_element([&](const Perm& x) {
    if (!have && x.order() == 11) {
      x11 = x;
      have = true;
    }
  });
  std::vector<Perm> invs;
  g.for_each_element([&](const Perm& x) {
    if (x.order() == 2) invs.push_back(x);
  });
  for (const Perm& t : invs) {
    PermGroup h(11, {x11, t});
    if (h.order() == 660) return coset_action(g, h.generators());
  }
  throw std::logic_error("no L2(11) subgroup located in M11");
}

PermGroup m11_degree12() {
  // image tables derived once from the degree-11 generators via the coset
  // action on the L2(11) subgroup (m11_degree12_derived reproduces them);
  // validated by order 7920, 3-transitivity and stabilizer order 660
  static const PermGroup cached(
      12, {Perm(std::vector<Point>{0, 7, 1, 4, 8, 9, 11, 3, 10, 2, 6, 5}),
           Perm(std::vector<Point>{7, 8, 4, 11, 3, 10, 5, 0, 1, 6, 9, 2})});
  return cached;
}

PermGroup projective_plane_group(std::uint64_t q) {
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7)
    throw invalid_input("projective plane groups supported for q in {2,3,4,5,7}");
  std::uint64_t p;
  unsigned f;
  prime_power_decompose(q, &p, &f);
  GfPtr F = Gf::make(p, f);

  // projective points: nonzero row vectors with leading coordinate 1,
  // enumerated by ascending code
  auto code_of = [&](const Vec& v) {
    return std::uint64_t(v[0]) + q * (std::uint64_t(v[1]) + q * v[2]);
  };
  std::vector<Vec> points;
  std::vector<std::int32_t> point_index(q * q * q, -1);
  for (std::uint64_t code = 1; code < q * q * q; ++code) {
    Vec v{static_cast<Gf::El>(code % q), static_cast<Gf::El>((code / q) % q),
          static_cast<Gf::El>(code / (q * q))};
    unsigned lead = 0;
    while (v[lead] == F->zero()) ++lead;
    if (v[lead] != F->one()) continue;
    point_index[code] = static_cast<std::int32_t>(points.size());
    points.push_back(v);
  }

  auto normalize = [&](Vec v) {
    unsigned lead = 0;
    while (v[lead] == F->zero()) ++lead;
    Gf::El inv = F->inv(v[lead]);
    for (auto& x : v) x = F->mul(x, inv);
    return v;
  };
  auto perm_of = [&](const Mat& m) {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      Vec w = normalize(vec_mat(points[i], m));
      img[i] = static_cast<Point>(point_index[code_of(w)]);
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  std::vector<std::pair<unsigned, unsigned>> roots{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  for (auto [r, c] : roots) {
    for (unsigned i = 0; i < f; ++i) {
      Mat m = Mat::identity(F, 3);
      Gf::El lambda = f == 1 ? F->one() : F->pow(F->generator(), i);
      m.set(r, c, lambda);
      gens.push_back(perm_of(m));
      if (f == 1) break;
    }
  }
  return PermGroup(points.size(), gens);
}

namespace {

Mat companion_of_generator(const GfPtr& big, std::uint64_t p, unsigned f) {
  // multiplication by the least primitive element, written over the prime
  // field in the power basis
  GfPtr base = Gf::make(p, 1);
  Mat m(base, f);
  Gf::El g = big->generator();
  for (unsigned i = 0; i < f; ++i) {
    Gf::El xi = big->pow(big->from_digits([&] {
                           std::vector<std::uint32_t> d(f, 0);
                           d[1 % f] = 1;
                           return d;
                         }()),
                         i);
    if (f == 1) xi = big->one();
    Gf::El prod = big->mul(xi, g);
    auto digits = big->digits(prod);
    for (unsigned c = 0; c < f; ++c) m.set(i, c, digits[c]);
  }
  return m;
}

} // namespace

AffinePair agl1(std::uint64_t q) {
  std::uint64_t p;
  unsigned f;
  if (!prime_power_decompose(q, &p, &f))
    throw invalid_input("agl1: q must be a prime power");
  GfPtr big = Gf::make(p, f);
  return AffinePair(p, f, {companion_of_generator(big, p, f)});
}

AffinePair asl2(std::uint64_t p) {
  if (!is_prime_u64(p)) throw invalid_input("asl2: p must be prime");
  GfPtr F = Gf::make(p, 1);
  Mat u = Mat::from_rows(F, {{1, 1}, {0, 1}});
  Mat w = Mat::from_rows(F, {{0, 1}, {p - 1, 0}});
  return AffinePair(p, 2, {u, w});
}

AffinePair sl2_natural(std::uint64_t q) {
  std::uint64_t p;
  unsigned f;
  if (!prime_power_decompose(q, &p, &f))
    throw invalid_input("sl2_natural: q must be a prime power");
  GfPtr big = Gf::make(p, f);
  GfPtr base = Gf::make(p, 1);

  auto mult_block = [&](Gf::El alpha) {
    // f x f multiplication-by-alpha matrix in the power basis
    std::vector<std::vector<Gf::El>> rows(f, std::vector<Gf::El>(f));
    for (unsigned i = 0; i < f; ++i) {
      std::vector<std::uint32_t> d(f, 0);
      d[i] = 1;
      Gf::El xi = big->from_digits(d);
      auto digits = big->digits(big->mul(xi, alpha));
      for (unsigned c = 0; c < f; ++c) rows[i][c] = digits[c];
    }
    return rows;
  };
  auto blow_down = [&](Gf::El a, Gf::El b, Gf::El c, Gf::El d) {
    Mat m(base, 2 * f);
    Gf::El entries[2][2] = {{a, b}, {c, d}};
    for (unsigned br = 0; br < 2; ++br)
      for (unsigned bc = 0; bc < 2; ++bc) {
        auto block = mult_block(entries[br][bc]);
        for (unsigned i = 0; i < f; ++i)
          for (unsigned j = 0; j < f; ++j)
            m.set(br * f + i, bc * f + j, block[i][j]);
      }
    return m;
  };

  const Gf& B = *big;
  std::vector<Mat> gens;
  gens.push_back(blow_down(B.one(), B.zero(), B.one(), B.one()));
  gens.push_back(blow_down(B.zero(), B.neg(B.one()), B.one(), B.zero()));
  if (q > 3) {
    Gf::El g = B.generator();
    gens.push_back(blow_down(g, B.zero(), B.zero(), B.inv(g)));
  }
  return AffinePair(p, 2 * f, gens);
}

AffinePair gl2_3_affine() {
  GfPtr F = Gf::make(3, 1);
  Mat u = Mat::from_rows(F, {{1, 1}, {0, 1}});
  Mat w = Mat::from_rows(F, {{0, 1}, {2, 0}});
  Mat d = Mat::from_rows(F, {{2, 0}, {0, 1}});
  return AffinePair(3, 2, {u, w, d});
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 1) throw invalid_input("symmetric group needs n >= 1");
  if (n == 1) return PermGroup(1);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens);
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw invalid_input("dihedral group on n points needs n >= 3");
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {Perm::from_cycles(n, {cyc}), Perm(std::move(refl))});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](std::string name, std::string family, std::string action,
                   std::uint64_t q, std::uint64_t degree, std::uint64_t order,
                   std::uint64_t r, std::vector<std::uint64_t> orders) {
      v.push_back(CatalogEntry{std::move(name), std::move(family),
                               std::move(action), q, degree, order, r != 0, r,
                               std::move(orders)});
    };
    add("L2(4) on P1", "L2", "P1", 4, 5, 60, 5, {5});
    add("L2(4) on cosets of D6", "L2", "D_split", 4, 10, 60, 5, {5});
    add("L2(4) on cosets of D10", "L2", "D_nonsplit", 4, 6, 60, 3, {3});
    add("L2(7) on P1", "L2", "P1", 7, 8, 168, 2, {2, 4});
    add("L2(7) on cosets of S4", "L2", "S4", 7, 7, 168, 7, {7});
    add("PGL2(7) on cosets of N(P1)", "PGL2", "P1", 7, 8, 336, 2, {2, 4, 8});
    add("L2(8) on P1", "L2", "P1", 8, 9, 504, 3, {3, 9});
    add("L2(8) on cosets of D14", "L2", "D_split", 8, 36, 504, 3, {3, 9});
    add("L2(8) on cosets of D18", "L2", "D_nonsplit", 8, 28, 504, 7, {7});
    add("GammaL2(8) on cosets of N(P1)", "GammaL2", "P1", 8, 9, 1512, 3, {3, 9});
    add("GammaL2(8) on cosets of N(D14)", "GammaL2", "D_split", 8, 36, 1512, 3,
        {3, 9});
    add("GammaL2(8) on cosets of N(D18)", "GammaL2", "D_nonsplit", 8, 28, 1512,
        7, {7});
    add("L2(9) on P1", "L2", "P1", 9, 10, 360, 5, {5});
    add("L2(13) on P1", "L2", "P1", 13, 14, 1092, 7, {7});
    add("L2(16) on P1", "L2", "P1", 16, 17, 4080, 17, {17});
    add("L2(16) on cosets of D30", "L2", "D_split", 16, 136, 4080, 17, {17});
    add("L2(17) on P1", "L2", "P1", 17, 18, 2448, 3, {3, 9});
    add("L2(25) on P1", "L2", "P1", 25, 26, 7800, 13, {13});
    add("L2(31) on P1", "L2", "P1", 31, 32, 14880, 2, {2, 4, 8, 16});
    add("PGL2(31) on cosets of N(P1)", "PGL2", "P1", 31, 32, 29760, 2,
        {2, 4, 8, 16, 32});
    add("L2(32) on cosets of D66", "L2", "D_nonsplit", 32, 496, 32736, 31, {31});
    add("GammaL2(32) on cosets of N(D66)", "GammaL2", "D_nonsplit", 32, 496,
        163680, 31, {31});
    add("L2(37) on P1", "L2", "P1", 37, 38, 25308, 19, {19});
    add("L2(49) on P1", "L2", "P1", 49, 50, 58800, 5, {5, 25});
    add("L3(2) on P1", "L3", "P1", 2, 7, 168, 7, {7});
    add("L3(3) on P1", "L3", "P1", 3, 13, 5616, 13, {13});
    add("L3(4) on P1", "L3", "P1", 4, 21, 20160, 7, {7});
    add("L3(5) on P1", "L3", "P1", 5, 31, 372000, 31, {31});
    add("L3(7) on P1", "L3", "P1", 7, 57, 1876896, 19, {19});
    add("M11 on cosets of L2(11)", "M11", "L2_11", 11, 12, 7920, 2, {4, 8});
    add("AGL1(5) natural", "AGL1", "NATURAL", 5, 5, 20, 5, {5});
    add("AGL1(7) natural", "AGL1", "NATURAL", 7, 7, 42, 7, {7});
    add("AGL1(8) natural", "AGL1", "NATURAL", 8, 8, 56, 2, {2});
    add("ASL2(2) natural", "ASL2", "NATURAL", 2, 4, 24, 2, {2, 4});
    add("ASL2(3) natural", "ASL2", "NATURAL", 3, 9, 216, 3, {3});
    add("ASL2(5) natural", "ASL2", "NATURAL", 5, 25, 3000, 5, {5});
    add("L2(11) on P1 (negative control)", "L2", "P1", 11, 12, 660, 0,
        {2, 3, 6});
    add("L2(19) on P1 (negative control)", "L2", "P1", 19, 20, 3420, 0,
        {2, 5, 10});
    add("S5 natural (negative control)", "S5", "NATURAL", 0, 5, 120, 0, {5, 6});
    return v;
  }();
  return entries;
}

PermGroup build_catalog_entry(const CatalogEntry& entry) {
  if (entry.action == "S4") return l2_7_on_s4().induced;
  if (entry.family == "L2" || entry.family == "PGL2" ||
      entry.family == "GammaL2") {
    Flavor fl = entry.family == "L2"
                    ? Flavor::PSL
                    : entry.family == "PGL2" ? Flavor::PGL : Flavor::GammaL;
    if (entry.action == "P1") {
      if (fl == Flavor::GammaL)
        return parabolic_normalizer_cosets_gamma(entry.q).induced;
      return projective_line_group(entry.q, fl);
    }
    return torus_normalizer_cosets(entry.q, fl, entry.action == "D_split")
        .induced;
  }
  if (entry.family == "L3") return projective_plane_group(entry.q);
  if (entry.family == "M11") return m11_degree12();
  if (entry.family == "AGL1") return as_permutation_group(agl1(entry.q));
  if (entry.family == "ASL2") return as_permutation_group(asl2(entry.q));
  if (entry.family == "S5") return symmetric_group(5);
  throw invalid_input("catalog entry has no builder: " + entry.name);
}

} // namespace derange::atlas
