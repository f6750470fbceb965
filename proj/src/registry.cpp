#include "derange/registry.hpp"

#include <algorithm>

#include "derange/atlas.hpp"
#include "derange/derangement.hpp"
#include "derange/errors.hpp"
#include "derange/number_theory.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace derange {

namespace {

std::string join_orders(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::uint64_t psl2_order(std::uint64_t q) {
  return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
}

std::uint64_t psl3_order(std::uint64_t q) {
  std::uint64_t d = (q - 1) % 3 == 0 ? 3 : 1;
  return q * q * q * (q * q * q - 1) * (q * q - 1) / d;
}

struct RowBuilder {
  std::vector<TableRow> rows;
  const Caps& caps;

  explicit RowBuilder(const Caps& c) : caps(c) {}

  void perm_row(std::string id, std::string desc, std::set<Scope> scopes,
                std::map<std::string, std::string> params, std::uint64_t r,
                std::vector<std::uint64_t> E, std::uint64_t order_bound,
                std::function<PermGroup()> build, bool expect_star = true) {
    TableRow row;
    row.row_id = std::move(id);
    row.description = std::move(desc);
    row.scopes = std::move(scopes);
    row.parameters = std::move(params);
    row.expected_r = r;
    row.expected_E = std::move(E);
    row.expect_star = expect_star;
    row.order_bound = order_bound;
    row.build_perm = std::move(build);
    rows.push_back(std::move(row));
  }

  void doc_row(std::string id, std::string desc, std::set<Scope> scopes,
               std::map<std::string, std::string> params, std::string reason) {
    TableRow row;
    row.row_id = std::move(id);
    row.description = std::move(desc);
    row.scopes = std::move(scopes);
    row.parameters = std::move(params);
    row.skip_reason = std::move(reason);
    rows.push_back(std::move(row));
  }

  void custom_row(std::string id, std::string desc, std::set<Scope> scopes,
                  std::function<TableRowResult(const Caps&)> fn) {
    TableRow row;
    row.row_id = std::move(id);
    row.description = std::move(desc);
    row.scopes = std::move(scopes);
    row.run_custom = std::move(fn);
    rows.push_back(std::move(row));
  }
};

TableRowResult run_perm_row(const TableRow& row, const Caps& caps) {
  TableRowResult res;
  res.row_id = row.row_id;
  res.parameters = row.parameters;
  res.expected_r = row.expected_r;
  res.expected_E = row.expected_E;
  if (row.skip_reason) {
    res.verdict = "SKIPPED";
    res.reason = *row.skip_reason;
    return res;
  }
  if (row.order_bound > caps.max_order) {
    res.verdict = "SKIPPED";
    res.reason = "order " + std::to_string(row.order_bound) + " exceeds cap " +
                 std::to_string(caps.max_order);
    return res;
  }
  PermGroup g = row.build_perm();
  res.constructed = true;
  if (g.degree() > caps.max_degree) {
    res.verdict = "SKIPPED";
    res.reason = "degree exceeds cap";
    return res;
  }
  StarResult star = star_property(g, caps.enum_cap);
  res.computed_E = star.order_set;
  res.computed_star = star.holds;
  res.computed_r = star.r;

  bool pass;
  if (row.expect_star) {
    pass = star.holds && star.r && *star.r == row.expected_r &&
           star.order_set == row.expected_E;
  } else {
    pass = !star.holds &&
           (row.expected_E.empty() || star.order_set == row.expected_E);
  }
  res.verdict = pass ? "PASS" : "FAIL";
  if (!pass)
    res.reason = "computed (r=" +
                 (star.r ? std::to_string(*star.r) : std::string("none")) +
                 ", E=" + join_orders(star.order_set) + ")";
  return res;
}

void add_table14_rows(RowBuilder& b) {
  using atlas::Flavor;
  const std::set<Scope> t1{Scope::Table1};
  const std::set<Scope> t14{Scope::Table1, Scope::Table4};

  // L3(q) on projective points, q^2+q+1 = (3,q-1) r
  struct L3Spec {
    std::uint64_t q, r;
  };
  for (L3Spec s : {L3Spec{2, 7}, L3Spec{3, 13}, L3Spec{4, 7}, L3Spec{5, 31}}) {
    b.perm_row("T1.L3.P1[q=" + std::to_string(s.q) + "]",
               "L3(q) on P1; q^2+q+1 = (3,q-1) r", t1,
               {{"q", std::to_string(s.q)}, {"r", std::to_string(s.r)}}, s.r,
               {s.r}, psl3_order(s.q),
               [q = s.q] { return atlas::projective_plane_group(q); });
  }
  if (b.caps.enable_l3_7) {
    b.perm_row("T1.L3.P1[q=7]", "L3(q) on P1; q^2+q+1 = (3,q-1) r", t1,
               {{"q", "7"}, {"r", "19"}}, 19, {19}, psl3_order(7),
               [] { return atlas::projective_plane_group(7); });
  } else {
    b.doc_row("T1.L3.P1[q=7]", "L3(q) on P1; q^2+q+1 = (3,q-1) r", t1,
              {{"q", "7"}, {"r", "19"}},
              "|L3(7)| = 1876896; enable with --enable-l3-7");
  }
  b.doc_row("T1.L3.P1.3r2", "L3(q) on P1; q^2+q+1 = 3 r^2", t1, {{"q", "313"}},
            "smallest instance q = 313 has degree 98283 and order ~1.3e13; "
            "covered by the nagell parameter check only");

  // GammaL2(q) on N(D_{2(q+1)}), r = q-1 a Mersenne prime.  q = 8 appears
  // below among the fixed GammaL2(8) rows.
  b.perm_row("T1.GammaL2.ND2q+1[q=32]",
             "GammaL2(q) on cosets of N(D_{2(q+1)}); r = q-1 Mersenne prime",
             t14, {{"q", "32"}, {"r", "31"}}, 31, {31}, 5 * psl2_order(32),
             [] {
               return atlas::torus_normalizer_cosets(32, Flavor::GammaL, false)
                   .induced;
             });
  b.doc_row("T1.GammaL2.ND2q+1[q=128]",
            "GammaL2(q) on cosets of N(D_{2(q+1)}); r = q-1 Mersenne prime",
            t14, {{"q", "128"}, {"r", "127"}},
            "|GammaL2(128)| = 14680064 exceeds the default order cap");

  // fixed GammaL2(8) rows
  b.perm_row("T1.GammaL2(8).NP1",
             "GammaL2(8) on cosets of N(P1)", t14, {{"q", "8"}}, 3, {3, 9},
             3 * psl2_order(8),
             [] { return atlas::parabolic_normalizer_cosets_gamma(8).induced; });
  b.perm_row("T1.GammaL2(8).ND14",
             "GammaL2(8) on cosets of N(D14)", t14, {{"q", "8"}}, 3, {3, 9},
             3 * psl2_order(8), [] {
               return atlas::torus_normalizer_cosets(8, Flavor::GammaL, true)
                   .induced;
             });
  b.perm_row("T1.GammaL2(8).ND18",
             "GammaL2(8) on cosets of N(D18); also the q=8 instance of the "
             "GammaL2 Mersenne row",
             t14, {{"q", "8"}}, 7, {7}, 3 * psl2_order(8), [] {
               return atlas::torus_normalizer_cosets(8, Flavor::GammaL, false)
                   .induced;
             });

  // PGL2(q) on N(P1), q = 2^{e+1} - 1 a Mersenne prime
  struct PglSpec {
    std::uint64_t q;
    std::vector<std::uint64_t> E;
  };
  for (PglSpec s : {PglSpec{7, {2, 4, 8}}, PglSpec{31, {2, 4, 8, 16, 32}}}) {
    b.perm_row("T1.PGL2.NP1[q=" + std::to_string(s.q) + "]",
               "PGL2(q) on cosets of N(P1); q = 2^{e+1}-1 Mersenne prime", t14,
               {{"q", std::to_string(s.q)}, {"r", "2"}}, 2, s.E,
               2 * psl2_order(s.q),
               [q = s.q] {
                 return atlas::projective_line_group(q, Flavor::PGL);
               });
  }

  // L2(q) on P1 with q = 2 r^e - 1
  struct P1Spec {
    std::uint64_t q, r;
    std::vector<std::uint64_t> E;
  };
  for (P1Spec s : {P1Spec{7, 2, {2, 4}}, P1Spec{9, 5, {5}}, P1Spec{13, 7, {7}},
                   P1Spec{17, 3, {3, 9}}, P1Spec{25, 13, {13}},
                   P1Spec{31, 2, {2, 4, 8, 16}}, P1Spec{37, 19, {19}},
                   P1Spec{49, 5, {5, 25}}}) {
    b.perm_row("T1.L2.P1.2re-1[q=" + std::to_string(s.q) + "]",
               "L2(q) on P1; q = 2 r^e - 1", t14,
               {{"q", std::to_string(s.q)}, {"r", std::to_string(s.r)}}, s.r,
               s.E, psl2_order(s.q),
               [q = s.q] {
                 return atlas::projective_line_group(q, Flavor::PSL);
               });
  }

  // L2(q) on P1 and on D_{2(q-1)} with r = q+1 a Fermat prime
  for (std::uint64_t q : {4ull, 16ull}) {
    std::uint64_t r = q + 1;
    b.perm_row("T1.L2.P1.fermat[q=" + std::to_string(q) + "]",
               "L2(q) on P1; r = q+1 Fermat prime", t14,
               {{"q", std::to_string(q)}, {"r", std::to_string(r)}}, r, {r},
               psl2_order(q),
               [q] { return atlas::projective_line_group(q, Flavor::PSL); });
    b.perm_row("T1.L2.D2q-1.fermat[q=" + std::to_string(q) + "]",
               "L2(q) on cosets of D_{2(q-1)}; r = q+1 Fermat prime", t14,
               {{"q", std::to_string(q)}, {"r", std::to_string(r)}}, r, {r},
               psl2_order(q), [q] {
                 return atlas::torus_normalizer_cosets(q, Flavor::PSL, true)
                     .induced;
               });
  }

  // L2(q) on D_{2(q+1)} with r = q-1 a Mersenne prime; q = 8 appears among
  // the fixed L2(8) rows
  struct MersSpec {
    std::uint64_t q, r;
  };
  for (MersSpec s : {MersSpec{4, 3}, MersSpec{32, 31}}) {
    b.perm_row("T1.L2.D2q+1.mersenne[q=" + std::to_string(s.q) + "]",
               "L2(q) on cosets of D_{2(q+1)}; r = q-1 Mersenne prime", t14,
               {{"q", std::to_string(s.q)}, {"r", std::to_string(s.r)}}, s.r,
               {s.r}, psl2_order(s.q), [q = s.q] {
                 return atlas::torus_normalizer_cosets(q, Flavor::PSL, false)
                     .induced;
               });
  }
  b.doc_row("T1.L2.D2q+1.mersenne[q=128]",
            "L2(q) on cosets of D_{2(q+1)}; r = q-1 Mersenne prime", t14,
            {{"q", "128"}, {"r", "127"}},
            "|L2(128)| = 2097024 exceeds the default order cap");

  // fixed L2(8) rows
  b.perm_row("T1.L2(8).P1", "L2(8) on P1", t14, {{"q", "8"}}, 3, {3, 9},
             psl2_order(8),
             [] { return atlas::projective_line_group(8, Flavor::PSL); });
  b.perm_row("T1.L2(8).D14", "L2(8) on cosets of D14", t14, {{"q", "8"}}, 3,
             {3, 9}, psl2_order(8), [] {
               return atlas::torus_normalizer_cosets(8, Flavor::PSL, true)
                   .induced;
             });
  b.perm_row("T1.L2(8).D18",
             "L2(8) on cosets of D18; also the q=8 instance of the L2 "
             "Mersenne row",
             t14, {{"q", "8"}}, 7, {7}, psl2_order(8), [] {
               return atlas::torus_normalizer_cosets(8, Flavor::PSL, false)
                   .induced;
             });

  // fixed small rows shared between the two tables
  b.perm_row("T4.L2(9).P1", "L2(9) on P1", t14, {{"q", "9"}}, 5, {5},
             psl2_order(9),
             [] { return atlas::projective_line_group(9, Flavor::PSL); });
  b.perm_row("T4.L2(7).S4", "L2(7) on cosets of S4", t14, {{"q", "7"}}, 7, {7},
             psl2_order(7), [] { return atlas::l2_7_on_s4().induced; });

  b.perm_row("T1.M11.L2(11)", "M11 on cosets of L2(11), degree 12", t1, {}, 2,
             {4, 8}, 7920, [] { return atlas::m11_degree12(); });

  b.doc_row("T3.non-M11",
            "the sporadic candidate list beyond the (M11, L2(11)) row", t1, {},
            "out of scope: only the M11 row is verified mechanically");
  b.doc_row("T1.negative.higher-rank",
            "higher-rank classical and exceptional groups (no examples)", t1,
            {}, "out of scope: excluded by the non-goals");
}

void add_affine_rows(RowBuilder& b) {
  const std::set<Scope> aff{Scope::Affine};
  auto affine_row = [&](std::string id, std::string desc,
                        std::function<AffinePair()> make, std::uint64_t r,
                        std::vector<std::uint64_t> E, bool expect_star) {
    b.custom_row(std::move(id), std::move(desc), aff,
                 [make = std::move(make), r, E = std::move(E),
                  expect_star](const Caps&) {
                   TableRowResult res;
                   res.expected_r = r;
                   res.expected_E = E;
                   AffinePair pair = make();
                   res.constructed = true;
                   AffineDerangements d = affine_derangements(pair);
                   res.computed_E = d.order_set;
                   AffineStar star = star_property_affine(pair);
                   res.computed_star = star.holds;
                   res.computed_r = star.r;
                   bool pass = expect_star
                                   ? (star.holds && star.r && *star.r == r &&
                                      d.order_set == E)
                                   : (!star.holds && d.order_set == E);
                   res.verdict = pass ? "PASS" : "FAIL";
                   if (!pass)
                     res.reason = "computed E=" + join_orders(d.order_set);
                   return res;
                 });
  };

  affine_row("AFF.ASL2(2)", "ASL2(2), degree 4", [] { return atlas::asl2(2); },
             2, {2, 4}, true);
  affine_row("AFF.ASL2(3)", "ASL2(3), degree 9", [] { return atlas::asl2(3); },
             3, {3}, true);
  affine_row("AFF.ASL2(5)", "ASL2(5), degree 25",
             [] { return atlas::asl2(5); }, 5, {5}, true);
  affine_row("AFF.ASL2(7)", "ASL2(7), degree 49",
             [] { return atlas::asl2(7); }, 7, {7}, true);
  for (std::uint64_t q : {3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
    std::uint64_t p = q;
    unsigned f = 1;
    prime_power_decompose(q, &p, &f);
    affine_row("AFF.AGL1(" + std::to_string(q) + ")",
               "AGL1(q), Frobenius, degree q",
               [q] { return atlas::agl1(q); }, p, {p}, true);
  }
  affine_row("AFF.SL2(4).natural", "SL2(4) on (Z_2)^4",
             [] { return atlas::sl2_natural(4); }, 2, {2, 4}, true);
  affine_row("AFF.GL2(3).control", "GL2(3) on (Z_3)^2: star must fail",
             [] { return atlas::gl2_3_affine(); }, 0, {3, 6}, false);

  b.doc_row("AFF.SL2(7).F3^12", "SL2(7) on a 12-dimensional module over Z_3",
            aff,
            {{"p", "3"}, {"k", "12"}},
            "module construction needs modular representation machinery; "
            "user-supplied generator matrices are accepted by the affine "
            "command");
}

void add_nt_rows(RowBuilder& b) {
  const std::set<Scope> nts{Scope::NumberTheory};

  b.custom_row("NT.gcd-identities", "closed-form gcd of q^n +- 1 pairs", nts,
               [](const Caps&) {
                 TableRowResult res;
                 res.constructed = true;
                 bool ok = true;
                 for (std::uint64_t q = 2; q <= 9 && ok; ++q)
                   for (std::uint64_t n = 1; n <= 12 && ok; ++n)
                     for (std::uint64_t m = 1; m <= 12 && ok; ++m)
                       for (int sn : {1, -1})
                         for (int sm : {1, -1}) {
                           nt::BigInt lhs =
                               gcd(nt::pow_big(q, n) + sn, nt::pow_big(q, m) + sm);
                           if (lhs != nt::gcd_qpow(q, n, m, sn, sm)) {
                             ok = false;
                             res.reason = "mismatch at q=" + std::to_string(q) +
                                          " n=" + std::to_string(n) +
                                          " m=" + std::to_string(m);
                           }
                         }
                 res.verdict = ok ? "PASS" : "FAIL";
                 return res;
               });

  b.custom_row(
      "NT.prime-power-eq", "r^m + 1 = s^n sweep, r,s <= 99, m,n <= 20", nts,
      [](const Caps&) {
        TableRowResult res;
        res.constructed = true;
        auto sols = nt::solve_prime_power_eq(99, 20);
        bool ok = sols.size() == 7;
        for (const auto& s : sols)
          if (s.cases.empty()) ok = false;
        res.verdict = ok ? "PASS" : "FAIL";
        if (!ok) res.reason = "untaggable or unexpected solution count";
        return res;
      });

  b.custom_row(
      "NT.table2", "prime-power quotient catalogue, sweep q <= 50", nts,
      [](const Caps&) {
        TableRowResult res;
        res.constructed = true;
        using R = nt::Table2Row;
        std::vector<std::tuple<R, int, std::uint64_t>> expected{
            {R::Q6_DQ_D6, -1, 2},  {R::Q5_D6, 1, 2},     {R::Q5_D6, 1, 3},
            {R::Q5_D6, 1, 7},      {R::Q5_D6, -1, 2},    {R::Q5_D6, -1, 5},
            {R::Q4_DQ_D4, -1, 2},  {R::Q4_DQ_D4, -1, 3}, {R::Q3_D4, 1, 2},
            {R::Q3_D4, 1, 3},      {R::Q3_D4, 1, 5},     {R::Q3_D4, -1, 2},
            {R::Q3_D4, -1, 3}};
        auto got = nt::table2_sweep(50);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        res.verdict = got == expected ? "PASS" : "FAIL";
        return res;
      });

  b.custom_row("NT.nagell", "q^2+q+1 = (3,q-1) r^e at q = 4 and q = 313", nts,
               [](const Caps&) {
                 TableRowResult res;
                 res.constructed = true;
                 auto a = nt::nagell_check(4);
                 auto c = nt::nagell_check(313);
                 bool ok = a.d == 3 && a.r && *a.r == 7 && a.e && *a.e == 1 &&
                           !a.f_is_3power && c.d == 3 && c.r && *c.r == 181 &&
                           c.e && *c.e == 2;
                 res.verdict = ok ? "PASS" : "FAIL";
                 return res;
               });

  b.custom_row(
      "NT.zsigmondy", "primitive prime divisor existence sweep", nts,
      [](const Caps&) {
        TableRowResult res;
        res.constructed = true;
        bool ok = true;
        for (std::uint64_t q = 2; q <= 32 && ok; ++q) {
          if (!prime_power_decompose(q, nullptr, nullptr)) continue;
          for (std::uint64_t e = 2; e <= 12 && ok; ++e) {
            bool exists = nt::ppd(q, e).largest_ppd.has_value();
            bool should =
                !(q == 2 && e == 6) && !(e == 2 && nt::is_mersenne_prime(q));
            if (exists != should) ok = false;
          }
        }
        res.verdict = ok ? "PASS" : "FAIL";
        return res;
      });
}

} // namespace

std::vector<TableRow> registry_rows(const Caps& caps) {
  RowBuilder b(caps);
  add_table14_rows(b);
  add_affine_rows(b);
  add_nt_rows(b);
  return std::move(b.rows);
}

std::vector<TableRowResult> run_rows(const std::set<Scope>& scopes,
                                     const Caps& caps) {
  std::vector<TableRow> all = registry_rows(caps);
  std::vector<const TableRow*> selected;
  for (const TableRow& row : all) {
    bool wanted = false;
    for (Scope s : scopes) wanted = wanted || row.scopes.count(s) > 0;
    if (wanted) selected.push_back(&row);
  }

  std::vector<TableRowResult> results(selected.size());
#if defined(_OPENMP)
  #pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(selected.size()); ++i) {
    const TableRow& row = *selected[i];
    TableRowResult res;
    try {
      if (row.run_custom) {
        res = row.run_custom(caps);
        res.row_id = row.row_id;
        if (res.parameters.empty()) res.parameters = row.parameters;
        if (row.skip_reason) {
          res.verdict = "SKIPPED";
          res.reason = *row.skip_reason;
        }
      } else if (row.build_perm || row.skip_reason) {
        res = run_perm_row(row, caps);
      }
    } catch (const std::exception& e) {
      res.row_id = row.row_id;
      res.verdict = "FAIL";
      res.reason = std::string("exception: ") + e.what();
    }
    results[i] = std::move(res);
  }
  std::sort(results.begin(), results.end(),
            [](const TableRowResult& a, const TableRowResult& b) {
              return a.row_id < b.row_id;
            });
  return results;
}

std::vector<TableRowResult> run_rows(Scope scope, const Caps& caps) {
  return run_rows(std::set<Scope>{scope}, caps);
}

SweepSummary summarize(const std::vector<TableRowResult>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    if (r.verdict == "PASS")
      ++s.passed;
    else if (r.verdict == "FAIL")
      ++s.failed;
    else
      ++s.skipped;
  }
  return s;
}

} // namespace derange
