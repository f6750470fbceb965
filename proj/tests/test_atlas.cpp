#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derange/atlas.hpp"
#include "derange/derangement.hpp"
#include "derange/errors.hpp"

using namespace derange;
using atlas::Flavor;

TEST_CASE("projective line groups match the closed-form orders") {
  struct Case {
    std::uint64_t q;
    Flavor fl;
    std::uint64_t order;
  };
  std::vector<Case> cases{
      {4, Flavor::PSL, 60},     {5, Flavor::PSL, 60},
      {7, Flavor::PSL, 168},    {8, Flavor::PSL, 504},
      {9, Flavor::PSL, 360},    {11, Flavor::PSL, 660},
      {13, Flavor::PSL, 1092},  {16, Flavor::PSL, 4080},
      {17, Flavor::PSL, 2448},  {7, Flavor::PGL, 336},
      {9, Flavor::PGL, 720},    {8, Flavor::GammaL, 1512},
      {32, Flavor::GammaL, 163680},
  };
  for (const Case& c : cases) {
    PermGroup g = atlas::projective_line_group(c.q, c.fl);
    CHECK(g.degree() == c.q + 1);
    CHECK(g.order() == c.order);
  }
  CHECK_THROWS_AS(atlas::projective_line_group(6, Flavor::PSL), invalid_input);
  CHECK_THROWS_AS(atlas::projective_line_group(256, Flavor::PSL), invalid_input);
}

TEST_CASE("the projective line action is doubly transitive") {
  for (std::uint64_t q : {4ull, 5ull, 7ull, 8ull, 9ull, 16ull}) {
    PermGroup g = atlas::projective_line_group(q, Flavor::PSL);
    REQUIRE(g.is_transitive());
    CHECK(g.is_primitive());
    // 2-transitivity: the point stabilizer is transitive on the rest
    PermGroup stab = g.point_stabilizer(0);
    auto orbits = stab.orbits();
    std::size_t nontrivial = 0;
    for (const auto& orb : orbits)
      if (orb.size() > 1) ++nontrivial;
    CHECK(nontrivial == 1);
  }
}

TEST_CASE("projective plane groups") {
  struct Case {
    std::uint64_t q;
    std::uint64_t degree, order;
  };
  for (const Case& c : std::vector<Case>{
           {2, 7, 168}, {3, 13, 5616}, {4, 21, 20160}, {5, 31, 372000}}) {
    PermGroup g = atlas::projective_plane_group(c.q);
    CHECK(g.degree() == c.degree);
    CHECK(g.order() == c.order);
    CHECK(g.is_primitive());
  }
  CHECK_THROWS_AS(atlas::projective_plane_group(8), invalid_input);
}

TEST_CASE("projective plane derangement orders at small q") {
  CHECK(order_set(atlas::projective_plane_group(2)) ==
        std::vector<std::uint64_t>{7});
  CHECK(order_set(atlas::projective_plane_group(3)) ==
        std::vector<std::uint64_t>{13});
  CHECK(order_set(atlas::projective_plane_group(4)) ==
        std::vector<std::uint64_t>{7});
}

TEST_CASE("torus normalizers in L2(q)") {
  // split side: D_{2(q-1)/(2,q-1)}
  PermGroup d6(5, atlas::torus_normalizer_subgroup(4, true));
  CHECK(d6.order() == 6);
  PermGroup d14(9, atlas::torus_normalizer_subgroup(8, true));
  CHECK(d14.order() == 14);
  // nonsplit side: D_{2(q+1)/(2,q-1)}
  PermGroup d10(5, atlas::torus_normalizer_subgroup(4, false));
  CHECK(d10.order() == 10);
  PermGroup d18(9, atlas::torus_normalizer_subgroup(8, false));
  CHECK(d18.order() == 18);
}

TEST_CASE("torus normalizer coset actions match the table rows") {
  CosetAction d18 = atlas::torus_normalizer_cosets(8, Flavor::PSL, false);
  CHECK(d18.induced.degree() == 28);
  StarResult s = star_property(d18.induced);
  CHECK(s.holds);
  CHECK(*s.r == 7);
  CHECK(s.order_set == std::vector<std::uint64_t>{7});

  CosetAction d14 = atlas::torus_normalizer_cosets(8, Flavor::PSL, true);
  CHECK(d14.induced.degree() == 36);
  StarResult s2 = star_property(d14.induced);
  CHECK(s2.holds);
  CHECK(*s2.r == 3);
  CHECK(s2.order_set == std::vector<std::uint64_t>{3, 9});

  CosetAction d6 = atlas::torus_normalizer_cosets(4, Flavor::PSL, true);
  CHECK(d6.induced.degree() == 10);
  StarResult s3 = star_property(d6.induced);
  CHECK(s3.holds);
  CHECK(*s3.r == 5);
  CHECK(s3.order_set == std::vector<std::uint64_t>{5});

  CosetAction d10 = atlas::torus_normalizer_cosets(4, Flavor::PSL, false);
  CHECK(d10.induced.degree() == 6);
  StarResult s4 = star_property(d10.induced);
  CHECK(s4.holds);
  CHECK(*s4.r == 3);
  CHECK(s4.order_set == std::vector<std::uint64_t>{3});
}

TEST_CASE("GammaL2(8) subgroup normalizer actions") {
  CosetAction np1 = atlas::parabolic_normalizer_cosets_gamma(8);
  CHECK(np1.parent.order() == 1512);
  CHECK(np1.subgroup.order() == 168);
  CHECK(np1.induced.degree() == 9);
  StarResult s = star_property(np1.induced);
  CHECK(*s.r == 3);
  CHECK(s.order_set == std::vector<std::uint64_t>{3, 9});

  CosetAction nd14 = atlas::torus_normalizer_cosets(8, Flavor::GammaL, true);
  CHECK(nd14.subgroup.order() == 42);
  CHECK(nd14.induced.degree() == 36);
  StarResult s2 = star_property(nd14.induced);
  CHECK(*s2.r == 3);
  CHECK(s2.order_set == std::vector<std::uint64_t>{3, 9});

  CosetAction nd18 = atlas::torus_normalizer_cosets(8, Flavor::GammaL, false);
  CHECK(nd18.subgroup.order() == 54);
  CHECK(nd18.induced.degree() == 28);
  StarResult s3 = star_property(nd18.induced);
  CHECK(*s3.r == 7);
  CHECK(s3.order_set == std::vector<std::uint64_t>{7});
}

TEST_CASE("M11") {
  PermGroup g = atlas::m11_degree12();
  CHECK(g.degree() == 12);
  CHECK(g.order() == 7920);
  CHECK(g.is_primitive());
  StarResult s = star_property(g);
  CHECK(s.holds);
  CHECK(*s.r == 2);
  CHECK(s.order_set == std::vector<std::uint64_t>{4, 8});
  CHECK(is_elusive(g));
}

TEST_CASE("affine constructors") {
  CHECK(atlas::asl2(3).h_order() == 24);
  CHECK(atlas::asl2(3).space_size() == 9);
  CHECK(atlas::agl1(5).h_order() == 4);
  CHECK(atlas::sl2_natural(4).h_order() == 60);
  CHECK(atlas::sl2_natural(4).space_size() == 16);

  // sharply 2-transitive AGL1(5)
  PermGroup agl15 = as_permutation_group(atlas::agl1(5));
  CHECK(agl15.order() == 20);
  CHECK(agl15.is_primitive());
}

TEST_CASE("negative controls fail the star property") {
  struct Case {
    PermGroup g;
    std::vector<std::uint64_t> orders;
  };
  std::vector<Case> cases;
  cases.push_back({atlas::projective_line_group(11, Flavor::PSL), {2, 3, 6}});
  cases.push_back({atlas::projective_line_group(19, Flavor::PSL), {2, 5, 10}});
  cases.push_back({atlas::symmetric_group(5), {5, 6}});
  for (const auto& c : cases) {
    StarResult s = star_property(c.g);
    CHECK_FALSE(s.holds);
    CHECK(s.order_set == c.orders);
    CHECK(s.coprime_witness.has_value());
  }
  StarResult aff = star_property(as_permutation_group(atlas::gl2_3_affine()));
  CHECK_FALSE(aff.holds);
  CHECK(aff.order_set == std::vector<std::uint64_t>{3, 6});
  CHECK_FALSE(aff.coprime_witness.has_value());  // {3,6} has no coprime pair
  CHECK(*aff.non_prime_power_witness == 6);
}

TEST_CASE("table row: L2(q) with q = 2r^e - 1 gives the full power ladder") {
  StarResult a = star_property(atlas::projective_line_group(7, Flavor::PSL));
  CHECK(a.order_set == std::vector<std::uint64_t>{2, 4});
  StarResult b = star_property(atlas::projective_line_group(17, Flavor::PSL));
  CHECK(b.order_set == std::vector<std::uint64_t>{3, 9});
}

TEST_CASE("every catalog entry matches its advertised metadata") {
  const auto& entries = atlas::catalog();
  CHECK(entries.size() >= 30);
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK_FALSE(e.name.empty());
    if (e.order > 500'000) continue;  // L3(7) is exercised behind the flag
    PermGroup g = atlas::build_catalog_entry(e);
    CHECK(g.degree() == e.degree);
    CHECK(g.order() == e.order);
    StarResult s = star_property(g);
    CHECK(s.holds == e.star_holds);
    if (e.star_holds) {
      REQUIRE(s.r.has_value());
      CHECK(*s.r == e.star_r);
    }
    CHECK(s.order_set == e.expected_orders);
  }
}
