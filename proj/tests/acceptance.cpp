// Acceptance suite: runs each criterion end to end and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "derange/affine.hpp"
#include "derange/atlas.hpp"
#include "derange/derangement.hpp"
#include "derange/number_theory.hpp"
#include "derange/registry.hpp"
#include "derange/scan.hpp"

#include "oracles.hpp"

using namespace derange;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << "\n";
    }
  }

  void finish(double seconds) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << "  ("
              << static_cast<int>(seconds * 1000) << " ms)\n";
    if (!ok) {
      std::cout << detail.str();
      ++failures;
    }
  }
};

template <typename F>
void run_criterion(const std::string& label, F&& body) {
  Criterion c;
  c.label = label;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  c.finish(secs);
}

std::string show(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

void criterion1(Criterion& c) {
  Caps caps;
  auto rows = run_rows(Scope::Table1, caps);
  std::map<std::string, const TableRowResult*> by_id;
  for (const auto& r : rows) by_id[r.row_id] = &r;

  for (const auto& r : rows)
    c.require(r.verdict != "FAIL", r.row_id + ": " + r.reason);

  struct Expect {
    const char* row;
    std::uint64_t r;
    std::vector<std::uint64_t> E;
  };
  // L2(4)/D10 sits in the Mersenne family (r = q-1 = 3) and L3(2)/P1 in the
  // L3 family (r = q^2+q+1 = 7); both values are confirmed by enumeration
  std::vector<Expect> expected{
      {"T1.L2.P1.fermat[q=4]", 5, {5}},
      {"T1.L2.D2q-1.fermat[q=4]", 5, {5}},
      {"T1.L2.D2q+1.mersenne[q=4]", 3, {3}},
      {"T1.L2.P1.2re-1[q=7]", 2, {2, 4}},
      {"T4.L2(7).S4", 7, {7}},
      {"T1.PGL2.NP1[q=7]", 2, {2, 4, 8}},
      {"T1.L2(8).P1", 3, {3, 9}},
      {"T1.L2(8).D14", 3, {3, 9}},
      {"T1.L2(8).D18", 7, {7}},
      {"T1.GammaL2(8).NP1", 3, {3, 9}},
      {"T1.GammaL2(8).ND14", 3, {3, 9}},
      {"T1.GammaL2(8).ND18", 7, {7}},
      {"T4.L2(9).P1", 5, {5}},
      {"T1.L2.P1.2re-1[q=17]", 3, {3, 9}},
      {"T1.L3.P1[q=2]", 7, {7}},
      {"T1.L3.P1[q=3]", 13, {13}},
      {"T1.L3.P1[q=4]", 7, {7}},
      {"T1.L3.P1[q=5]", 31, {31}},
      {"T1.M11.L2(11)", 2, {4, 8}},
  };
  for (const auto& e : expected) {
    auto it = by_id.find(e.row);
    if (it == by_id.end()) {
      c.require(false, std::string(e.row) + " missing from the sweep");
      continue;
    }
    const TableRowResult& r = *it->second;
    c.require(r.verdict == "PASS", std::string(e.row) + " verdict " + r.verdict);
    c.require(r.computed_r && *r.computed_r == e.r,
              std::string(e.row) + " computed r");
    c.require(r.computed_E == e.E, std::string(e.row) + " computed E = " +
                                       show(r.computed_E) + ", expected " +
                                       show(e.E));
  }
}

void criterion2(Criterion& c) {
  struct Control {
    std::string name;
    PermGroup g;
    std::vector<std::uint64_t> E;
  };
  std::vector<Control> controls;
  controls.push_back({"L2(11) on P1",
                      atlas::projective_line_group(11, atlas::Flavor::PSL),
                      {2, 3, 6}});
  controls.push_back({"L2(19) on P1",
                      atlas::projective_line_group(19, atlas::Flavor::PSL),
                      {2, 5, 10}});
  controls.push_back({"S5 natural", atlas::symmetric_group(5), {5, 6}});
  controls.push_back({"GL2(3) on (Z_3)^2",
                      as_permutation_group(atlas::gl2_3_affine()),
                      {3, 6}});
  for (const auto& ctl : controls) {
    StarResult s = star_property(ctl.g);
    c.require(!s.holds, ctl.name + ": star unexpectedly holds");
    c.require(s.order_set == ctl.E,
              ctl.name + ": E = " + show(s.order_set) + ", expected " +
                  show(ctl.E));
    bool witnessed = s.coprime_witness.has_value() ||
                     s.non_prime_power_witness.has_value();
    c.require(witnessed, ctl.name + ": no failure witness");
    if (s.coprime_witness)
      c.require(std::gcd(s.coprime_witness->first, s.coprime_witness->second) ==
                    1,
                ctl.name + ": witness orders are not coprime");
    if (!s.coprime_witness && s.non_prime_power_witness)
      c.require(!is_prime_power_u64(*s.non_prime_power_witness),
                ctl.name + ": witness order is a prime power");
  }
}

void criterion3(Criterion& c) {
  std::vector<std::pair<std::string, AffinePair>> corpus;
  corpus.emplace_back("ASL2(2)", atlas::asl2(2));
  corpus.emplace_back("ASL2(3)", atlas::asl2(3));
  corpus.emplace_back("ASL2(5)", atlas::asl2(5));
  corpus.emplace_back("ASL2(7)", atlas::asl2(7));
  corpus.emplace_back("AGL1(4)", atlas::agl1(4));
  corpus.emplace_back("AGL1(5)", atlas::agl1(5));
  corpus.emplace_back("AGL1(7)", atlas::agl1(7));
  corpus.emplace_back("AGL1(8)", atlas::agl1(8));
  corpus.emplace_back("AGL1(9)", atlas::agl1(9));
  corpus.emplace_back("SL2(4) natural", atlas::sl2_natural(4));
  corpus.emplace_back("GL2(3) control", atlas::gl2_3_affine());
  c.require(corpus.size() >= 8, "corpus has fewer than 8 pairs");

  for (const auto& [name, pair] : corpus) {
    // the three equivalent conditions agree pairwise
    Lemma52Check chk = lemma52_check(pair, pair.p());
    c.require(chk.star == chk.stabilizers,
              name + ": star vs two-point stabilizers");
    c.require(chk.star == chk.semiregular, name + ": star vs semiregularity");

    // the affine criterion agrees with the permutation-level star property
    if (pair.space_size() <= 81) {
      AffineStar aff = star_property_affine(pair);
      StarResult perm = star_property(as_permutation_group(pair));
      c.require(aff.holds == perm.holds, name + ": criterion vs permutations");
      if (aff.holds && perm.holds)
        c.require(*aff.r == *perm.r, name + ": criterion prime differs");
    }

    // the Sylow reduction preserves the derangement order set
    AffineStar aff = star_property_affine(pair);
    if (aff.holds) {
      SylowReduction red = sylow_reduction(pair);
      c.require(red.e_k_p == affine_derangements(pair).order_set,
                name + ": E(G) differs from E_K(P)");
    }

    // the exponent criterion is a biconditional
    ExponentCriterion crit = exponent_criterion(pair);
    c.require(crit.e_equals_r == crit.criterion_holds,
              name + ": exponent criterion direction mismatch");
  }
}

void criterion4(Criterion& c) {
  // gcd identities over the full sweep
  for (std::uint64_t q = 2; q <= 9; ++q)
    for (std::uint64_t n = 1; n <= 12; ++n)
      for (std::uint64_t m = 1; m <= 12; ++m)
        for (int sn : {1, -1})
          for (int sm : {1, -1}) {
            nt::BigInt direct =
                gcd(nt::pow_big(q, n) + sn, nt::pow_big(q, m) + sm);
            if (direct != nt::gcd_qpow(q, n, m, sn, sm)) {
              c.require(false, "gcd mismatch at q=" + std::to_string(q) +
                                   ",n=" + std::to_string(n) +
                                   ",m=" + std::to_string(m));
              return;
            }
          }

  // every prime-power-equation solution is taggable
  auto sols = nt::solve_prime_power_eq(99, 20);
  c.require(sols.size() == 7, "unexpected solution count " +
                                  std::to_string(sols.size()));
  for (const auto& s : sols)
    c.require(!s.cases.empty(), "untaggable solution " + std::to_string(s.r) +
                                    "^" + std::to_string(s.m) + "+1");

  // the prime-power quotient catalogue is reproduced exactly
  using R = nt::Table2Row;
  std::vector<std::tuple<R, int, std::uint64_t>> expected{
      {R::Q6_DQ_D6, -1, 2}, {R::Q5_D6, 1, 2},     {R::Q5_D6, 1, 3},
      {R::Q5_D6, 1, 7},     {R::Q5_D6, -1, 2},    {R::Q5_D6, -1, 5},
      {R::Q4_DQ_D4, -1, 2}, {R::Q4_DQ_D4, -1, 3}, {R::Q3_D4, 1, 2},
      {R::Q3_D4, 1, 3},     {R::Q3_D4, 1, 5},     {R::Q3_D4, -1, 2},
      {R::Q3_D4, -1, 3}};
  auto got = nt::table2_sweep(50);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  c.require(got == expected, "prime-power quotient sweep differs");

  auto a = nt::nagell_check(4);
  c.require(a.d == 3 && a.r && *a.r == 7 && a.e && *a.e == 1,
            "nagell_check(4) != (3, 7, 1)");
  auto b = nt::nagell_check(313);
  c.require(b.d == 3 && b.r && *b.r == 181 && b.e && *b.e == 2,
            "nagell_check(313) != (3, 181, 2)");
}

void criterion5(Criterion& c) {
  // S3 is the sharply 2-transitive AGL1(3) in disguise
  std::vector<std::pair<std::string, PermGroup>> corpus;
  corpus.emplace_back("AGL1(3) as S3", atlas::symmetric_group(3));
  corpus.emplace_back("S4", atlas::symmetric_group(4));
  corpus.emplace_back("S5", atlas::symmetric_group(5));
  corpus.emplace_back("D4", atlas::dihedral_group(4));
  corpus.emplace_back("C6", atlas::cyclic_group(6));
  corpus.emplace_back("C12", atlas::cyclic_group(12));
  for (std::uint64_t q : {3ull, 4ull, 5ull, 7ull, 8ull})
    corpus.emplace_back("AGL1(" + std::to_string(q) + ")",
                        as_permutation_group(atlas::agl1(q)));
  for (std::uint64_t q : {4ull, 7ull, 8ull, 9ull, 11ull, 13ull, 17ull})
    corpus.emplace_back("L2(" + std::to_string(q) + ") on P1",
                        atlas::projective_line_group(q, atlas::Flavor::PSL));
  corpus.emplace_back("L3(2)", atlas::projective_plane_group(2));
  corpus.emplace_back("M11 degree 12", atlas::m11_degree12());
  corpus.emplace_back("ASL2(3)", as_permutation_group(atlas::asl2(3)));
  corpus.emplace_back("L2(8) on D18 cosets",
                      atlas::torus_normalizer_cosets(8, atlas::Flavor::PSL, false)
                          .induced);

  for (const auto& [name, g] : corpus) {
    if (!g.is_transitive()) {
      c.require(false, name + " is not transitive");
      continue;
    }
    ElementScan s = scan_elements(g);
    c.require(s.fix_sum == g.order(), name + ": fixed point sum differs from |G|");
    DerangementReport rep = analyze_group(g);
    c.require(rep.fks_witness.has_value(),
              name + ": no prime-power derangement witness");
    // delta >= 1/degree, equality only on the sharply 2-transitive members
    c.require(rep.delta.num * g.degree() >= rep.delta.den,
              name + ": derangement proportion below 1/degree");
    bool equality = rep.delta.num * g.degree() == rep.delta.den;
    bool sharply = name.rfind("AGL1(", 0) == 0;
    c.require(equality == sharply, name + ": bound equality mismatch");
  }

  // chain order equals the brute-force closure order up to 5000
  for (const auto& [name, g] : corpus) {
    if (g.order() > 5000) continue;
    auto closure = oracles::brute_closure(g.degree(), g.generators());
    c.require(g.order() == closure.size(), name + ": closure order differs");
  }
}

void criterion6(Criterion& c) {
  Caps caps;
  std::map<std::string, std::string> skipped;
  for (Scope s : {Scope::Table1, Scope::Affine})
    for (const auto& r : run_rows(s, caps))
      if (r.verdict == "SKIPPED") skipped[r.row_id] = r.reason;

  for (const char* id : {"T1.L3.P1.3r2", "AFF.SL2(7).F3^12", "T3.non-M11",
                         "T1.negative.higher-rank"}) {
    auto it = skipped.find(id);
    c.require(it != skipped.end(),
              std::string(id) + " is not reported as SKIPPED");
    if (it != skipped.end())
      c.require(!it->second.empty(), std::string(id) + " lacks a reason");
  }
}

} // namespace

int main() {
  run_criterion("1. classification table regression (exact r and E per row)",
                criterion1);
  run_criterion("2. negative controls fail with explicit witnesses", criterion2);
  run_criterion("3. affine equivalence suite on the semidirect corpus",
                criterion3);
  run_criterion("4. number-theoretic sweeps against direct computation",
                criterion4);
  run_criterion("5. counting identities, bounds, witnesses, chain orders",
                criterion5);
  run_criterion("6. out-of-reach rows are reported as skipped with reasons",
                criterion6);
  if (failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return failures;
}
