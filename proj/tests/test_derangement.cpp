#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "derange/atlas.hpp"
#include "derange/coset.hpp"
#include "derange/derangement.hpp"
#include "derange/errors.hpp"

#include "oracles.hpp"

using namespace derange;

namespace {

PermGroup s3() { return atlas::symmetric_group(3); }

std::vector<std::uint64_t> orders_of(const PermGroup& g) {
  return order_set(g);
}

} // namespace

TEST_CASE("derangements of S3 are the two 3-cycles") {
  auto ds = derangement_set(s3());
  REQUIRE(ds.size() == 2);
  for (const Perm& d : ds) CHECK(d.order() == 3);
}

TEST_CASE("sharply 2-transitive groups meet the derangement bound exactly") {
  PermGroup agl15 = as_permutation_group(atlas::agl1(5));
  auto ds = derangement_set(agl15);
  CHECK(ds.size() == 4);
  DerangementReport rep = analyze_group(agl15);
  CHECK(rep.delta == make_rational(1, 5));
}

TEST_CASE("derangement set equals the complement of the stabilizer conjugates") {
  std::vector<PermGroup> corpus;
  corpus.push_back(s3());
  corpus.push_back(atlas::symmetric_group(4));
  corpus.push_back(atlas::dihedral_group(4));
  corpus.push_back(atlas::cyclic_group(6));
  corpus.push_back(as_permutation_group(atlas::agl1(5)));
  corpus.push_back(atlas::projective_line_group(8, atlas::Flavor::PSL));
  for (const PermGroup& g : corpus) {
    auto direct = derangement_set(g);
    std::set<Perm> direct_set(direct.begin(), direct.end());
    auto by_union =
        oracles::derangements_by_stabilizer_union(g.degree(), g.generators());
    CHECK(direct_set == by_union);
  }
}

TEST_CASE("intransitive input is rejected") {
  PermGroup intrans(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(derangement_set(intrans), invalid_input);
  CHECK_THROWS_AS(order_set(intrans), invalid_input);
  CHECK_THROWS_AS(analyze_group(intrans), invalid_input);
}

TEST_CASE("derangement order sets from the tables") {
  CHECK(orders_of(atlas::projective_line_group(8, atlas::Flavor::PSL)) ==
        std::vector<std::uint64_t>{3, 9});
  CHECK(orders_of(atlas::projective_line_group(9, atlas::Flavor::PSL)) ==
        std::vector<std::uint64_t>{5});
  CHECK(orders_of(atlas::projective_line_group(7, atlas::Flavor::PGL)) ==
        std::vector<std::uint64_t>{2, 4, 8});
}

TEST_CASE("star property positive cases") {
  StarResult a =
      star_property(atlas::projective_line_group(7, atlas::Flavor::PSL));
  CHECK(a.holds);
  CHECK(*a.r == 2);
  CHECK(a.order_set == std::vector<std::uint64_t>{2, 4});

  StarResult b = star_property(atlas::l2_7_on_s4().induced);
  CHECK(b.holds);
  CHECK(*b.r == 7);
  CHECK(b.order_set == std::vector<std::uint64_t>{7});

  StarResult c = star_property(s3());
  CHECK(c.holds);
  CHECK(*c.r == 3);
}

TEST_CASE("star property failure carries a witness") {
  StarResult a =
      star_property(atlas::projective_line_group(11, atlas::Flavor::PSL));
  CHECK_FALSE(a.holds);
  CHECK_FALSE(a.r.has_value());
  CHECK(a.order_set == std::vector<std::uint64_t>{2, 3, 6});
  REQUIRE(a.coprime_witness.has_value());
  CHECK(std::gcd(a.coprime_witness->first, a.coprime_witness->second) == 1);

  StarResult b = star_property(atlas::symmetric_group(5));
  CHECK_FALSE(b.holds);
  CHECK(b.order_set == std::vector<std::uint64_t>{5, 6});
  REQUIRE(b.coprime_witness.has_value());
}

TEST_CASE("elusive groups") {
  CHECK(is_elusive(atlas::m11_degree12()));
  CHECK_FALSE(is_elusive(s3()));
  CHECK_FALSE(is_elusive(atlas::projective_line_group(8, atlas::Flavor::PSL)));
}

TEST_CASE("M11 report matches the classification row") {
  DerangementReport rep = analyze_group(atlas::m11_degree12());
  CHECK(rep.degree == 12);
  CHECK(rep.group_order == 7920);
  CHECK(rep.primitive);
  CHECK(rep.order_set == std::vector<std::uint64_t>{4, 8});
  CHECK(rep.star.holds);
  CHECK(*rep.star.r == 2);
  CHECK(rep.elusive);
  CHECK(rep.derangement_count == 2970);
  CHECK(rep.delta == make_rational(3, 8));
  CHECK(*rep.fks_witness == 4);
}

TEST_CASE("two-coverings") {
  PermGroup m11 = atlas::m11_degree12();
  PermGroup l211 = m11.point_stabilizer(0);
  CHECK(l211.order() == 660);
  PermGroup syl2 = sylow_subgroup(m11, 2);
  CHECK(is_two_covering(m11, l211.generators(), syl2.generators()));

  CHECK_THROWS_AS(
      is_two_covering(m11, m11.generators(), syl2.generators()),
      invalid_input);

  PermGroup g3 = s3();
  std::vector<Perm> t{Perm::from_cycles(3, {{0, 1}})};
  CHECK_FALSE(is_two_covering(g3, t, t));
}

TEST_CASE("star property agrees with the Sylow two-covering") {
  struct Case {
    PermGroup g;
    std::uint64_t r;
  };
  std::vector<Case> cases;
  cases.push_back({atlas::projective_line_group(8, atlas::Flavor::PSL), 3});
  cases.push_back({atlas::m11_degree12(), 2});
  cases.push_back({atlas::l2_7_on_s4().induced, 7});
  for (const auto& c : cases) {
    StarResult star = star_property(c.g);
    REQUIRE(star.holds);
    CHECK(*star.r == c.r);
    PermGroup h = c.g.point_stabilizer(0);
    PermGroup k = sylow_subgroup(c.g, c.r);
    CHECK(is_two_covering(c.g, h.generators(), k.generators()));
  }
  // and the covering fails for a wrong prime
  PermGroup l28 = atlas::projective_line_group(8, atlas::Flavor::PSL);
  PermGroup h = l28.point_stabilizer(0);
  PermGroup k7 = sylow_subgroup(l28, 7);
  CHECK_FALSE(is_two_covering(l28, h.generators(), k7.generators()));
}

TEST_CASE("prime graphs") {
  PrimeGraph c6 = prime_graph(atlas::cyclic_group(6));
  CHECK(c6.primes == std::vector<std::uint64_t>{2, 3});
  REQUIRE(c6.edges.size() == 1);
  CHECK(c6.edges[0].first == 2);
  CHECK(c6.edges[0].second == 3);
  CHECK(c6.isolated.empty());

  PrimeGraph l28 = prime_graph(atlas::projective_line_group(8, atlas::Flavor::PSL));
  CHECK(l28.primes == std::vector<std::uint64_t>{2, 3, 7});
  CHECK(l28.edges.empty());
  CHECK(l28.isolated == std::vector<std::uint64_t>{2, 3, 7});

  PrimeGraph s4 = prime_graph(atlas::symmetric_group(4));
  CHECK(s4.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(s4.edges.empty());  // S4 has no element of order 6
  CHECK(s4.isolated == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("coset disjointness is equivalent to unique fixed points") {
  // S3 over A3: the transposition coset has a unique fixed point everywhere
  PermGroup g = s3();
  std::vector<Perm> a3{Perm::from_cycles(3, {{0, 1, 2}})};
  Perm t = Perm::from_cycles(3, {{0, 1}});
  auto res = coset_unique_fixed_point_check(g, a3, t);
  CHECK(res.derangement_free);
  CHECK(res.all_unique_fixed_point);

  // PGL2(7) over L2(7): the outer coset contains derangements of order 8
  PermGroup pgl = atlas::projective_line_group(7, atlas::Flavor::PGL);
  PermGroup psl = atlas::projective_line_group(7, atlas::Flavor::PSL);
  Perm rep;
  bool have = false;
  pgl.for_each_element([&](const Perm& x) {
    if (!have && !psl.contains(x)) {
      rep = x;
      have = true;
    }
  });
  REQUIRE(have);
  auto res2 = coset_unique_fixed_point_check(pgl, psl.generators(), rep);
  CHECK_FALSE(res2.derangement_free);
  CHECK_FALSE(res2.all_unique_fixed_point);

  // intransitive normal subgroup violates the precondition
  PermGroup c4 = atlas::cyclic_group(4);
  std::vector<Perm> c2{Perm::from_cycles(4, {{0, 2}, {1, 3}})};
  CHECK_THROWS_AS(
      coset_unique_fixed_point_check(c4, c2, Perm::from_cycles(4, {{0, 1, 2, 3}})),
      invalid_input);
}

TEST_CASE("star implies r is isolated in the prime graph or pi(G) = pi(H)") {
  struct Case {
    PermGroup g;
    std::uint64_t r;
  };
  std::vector<Case> cases;
  cases.push_back({atlas::projective_line_group(8, atlas::Flavor::PSL), 3});
  cases.push_back({atlas::m11_degree12(), 2});
  cases.push_back({atlas::l2_7_on_s4().induced, 7});
  cases.push_back({atlas::projective_line_group(9, atlas::Flavor::PSL), 5});
  for (const auto& c : cases) {
    REQUIRE(star_property(c.g).holds);
    PrimeGraph pg = prime_graph(c.g);
    bool isolated = std::find(pg.isolated.begin(), pg.isolated.end(), c.r) !=
                    pg.isolated.end();
    PrimeGraph ph = prime_graph(c.g.point_stabilizer(0));
    bool same_primes = pg.primes == ph.primes;
    CHECK((isolated || same_primes));
  }
}

TEST_CASE("when star holds the prime set of G lies in that of H and r") {
  struct Case {
    PermGroup g;
    std::uint64_t r;
  };
  std::vector<Case> cases;
  cases.push_back({atlas::projective_line_group(8, atlas::Flavor::PSL), 3});
  cases.push_back({atlas::projective_line_group(9, atlas::Flavor::PSL), 5});
  cases.push_back({atlas::m11_degree12(), 2});
  for (const auto& c : cases) {
    PermGroup h = c.g.point_stabilizer(0);
    PrimeGraph pg = prime_graph(c.g);
    PrimeGraph ph = prime_graph(h);
    for (std::uint64_t p : pg.primes) {
      bool in_h = std::find(ph.primes.begin(), ph.primes.end(), p) !=
                  ph.primes.end();
      CHECK((in_h || p == c.r));
    }
  }
}

TEST_CASE("centralizers of derangements are r-groups when star holds") {
  struct Case {
    PermGroup g;
    std::uint64_t r;
  };
  std::vector<Case> cases;
  cases.push_back({atlas::projective_line_group(8, atlas::Flavor::PSL), 3});
  cases.push_back({as_permutation_group(atlas::agl1(7)), 7});
  cases.push_back({atlas::m11_degree12(), 2});
  for (const auto& c : cases) {
    auto ds = derangement_set(c.g);
    // sample a handful to keep the brute force affordable
    std::size_t step = std::max<std::size_t>(1, ds.size() / 8);
    for (std::size_t i = 0; i < ds.size(); i += step) {
      std::uint64_t o = centralizer(c.g, ds[i]).order();
      while (o % c.r == 0) o /= c.r;
      CHECK(o == 1);
    }
  }
}

TEST_CASE("derangements of a normal subgroup action embed in the big group") {
  // G = GammaL2(8) over N = L2(8) with K = D14 = H intersect N
  CosetAction big = atlas::torus_normalizer_cosets(8, atlas::Flavor::GammaL, true);
  PermGroup n = atlas::projective_line_group(8, atlas::Flavor::PSL);
  std::vector<Perm> k_gens = atlas::torus_normalizer_subgroup(8, true);
  PermGroup k(n.degree(), k_gens);
  CHECK(k.order() == 14);

  // Delta_K(N): elements of N with no conjugate in K
  CosetAction small = coset_action(n, k_gens);
  std::set<Perm> delta_k;
  n.for_each_element([&](const Perm& x) {
    if (!small.conjugates_into_subgroup(x)) delta_k.insert(x);
  });
  CHECK_FALSE(delta_k.empty());
  // containment: each lies in Delta_H(G)
  for (const Perm& x : delta_k)
    CHECK_FALSE(big.conjugates_into_subgroup(x));
}

TEST_CASE("a primitive product action fails the fixed-prime property") {
  // S5 wr S2 acting on ordered pairs: primitive of product type, so neither
  // almost simple nor affine
  auto lift_to_pairs = [](const Perm& s) {
    std::vector<Point> img(25);
    for (Point i = 0; i < 5; ++i)
      for (Point j = 0; j < 5; ++j) img[5 * i + j] = 5 * s[i] + j;
    return Perm(std::move(img));
  };
  std::vector<Point> swap_coords(25);
  for (Point i = 0; i < 5; ++i)
    for (Point j = 0; j < 5; ++j) swap_coords[5 * i + j] = 5 * j + i;
  PermGroup s5 = atlas::symmetric_group(5);
  std::vector<Perm> gens;
  for (const Perm& s : s5.generators()) gens.push_back(lift_to_pairs(s));
  gens.push_back(Perm(std::move(swap_coords)));
  PermGroup g(25, std::move(gens));

  CHECK(g.order() == 28800);
  CHECK(g.is_primitive());
  DerangementReport rep = analyze_group(g);
  CHECK(rep.derangement_count == 13904);
  CHECK(rep.order_set ==
        std::vector<std::uint64_t>{5, 6, 10, 12, 15, 20, 30});
  CHECK_FALSE(rep.star.holds);
  REQUIRE(rep.star.coprime_witness.has_value());
  CHECK(rep.star.coprime_witness->first == 5);
  CHECK(rep.star.coprime_witness->second == 6);
}

TEST_CASE("fks witness exists on every transitive corpus member") {
  std::vector<PermGroup> corpus;
  corpus.push_back(s3());
  corpus.push_back(atlas::symmetric_group(5));
  corpus.push_back(atlas::dihedral_group(6));
  corpus.push_back(atlas::cyclic_group(12));
  corpus.push_back(atlas::m11_degree12());
  corpus.push_back(atlas::projective_line_group(11, atlas::Flavor::PSL));
  corpus.push_back(atlas::projective_line_group(13, atlas::Flavor::PSL));
  for (const PermGroup& g : corpus) {
    DerangementReport rep = analyze_group(g);
    REQUIRE(rep.fks_witness.has_value());
    CHECK(is_prime_power_u64(*rep.fks_witness));
  }
}

TEST_CASE("cameron-cohen bound with equality only for the sharply 2-transitive") {
  struct Case {
    PermGroup g;
    bool sharp;
  };
  std::vector<Case> cases;
  for (std::uint64_t q : {3ull, 4ull, 5ull, 7ull, 8ull})
    cases.push_back({as_permutation_group(atlas::agl1(q)), true});
  cases.push_back({atlas::symmetric_group(5), false});
  cases.push_back({atlas::m11_degree12(), false});
  cases.push_back({atlas::projective_line_group(8, atlas::Flavor::PSL), false});
  cases.push_back({atlas::cyclic_group(6), false});
  for (const auto& c : cases) {
    DerangementReport rep = analyze_group(c.g);
    // delta >= 1/degree
    CHECK(rep.delta.num * c.g.degree() >= rep.delta.den);
    bool equal = rep.delta.num * c.g.degree() == rep.delta.den;
    CHECK(equal == c.sharp);
  }
}
