#include "derange/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "derange/atlas.hpp"
#include "derange/coset.hpp"
#include "derange/derangement.hpp"
#include "derange/errors.hpp"
#include "derange/io.hpp"
#include "derange/number_theory.hpp"
#include "derange/registry.hpp"

namespace derange::cli {

namespace {

using io::json;

void apply_env_caps(Caps& caps) {
  if (const char* v = std::getenv("DERANGE_MAX_ORDER"))
    caps.max_order = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("DERANGE_MAX_DEGREE"))
    caps.max_degree = std::strtoull(v, nullptr, 10);
}

json row_result_to_json(const TableRowResult& r) {
  json j;
  j["row_id"] = r.row_id;
  j["parameters"] = r.parameters;
  j["constructed"] = r.constructed;
  j["expected_E"] = r.expected_E;
  j["computed_E"] = r.computed_E;
  if (r.expected_r != 0)
    j["expected_r"] = r.expected_r;
  else
    j["expected_r"] = nullptr;
  if (r.computed_r)
    j["computed_r"] = *r.computed_r;
  else
    j["computed_r"] = nullptr;
  j["verdict"] = r.verdict;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json big_to_json(const nt::BigInt& v) {
  // numbers beyond 64 bits are emitted as decimal strings
  if (v <= std::numeric_limits<std::uint64_t>::max())
    return json(static_cast<std::uint64_t>(v));
  return json(v.str());
}

int cmd_analyze(const std::string& group_file, const std::string& subgroup_file,
                const Caps& caps, bool meta, std::ostream& out,
                std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  io::NamedGroup named = io::load_group_file(group_file);
  PermGroup g = named.group;
  if (!subgroup_file.empty()) {
    io::NamedGroup sub = io::load_group_file(subgroup_file);
    if (sub.group.degree() != g.degree())
      throw invalid_input("subgroup file degree differs from the group file");
    g = coset_action(g, sub.group.generators(), caps.max_degree).induced;
  }
  if (!g.is_transitive())
    throw invalid_input("analysis requires a transitive group");
  if (g.order() > caps.max_order)
    throw cap_exceeded("group order " + std::to_string(g.order()) +
                       " exceeds cap " + std::to_string(caps.max_order) +
                       " (raise with --max-order)");
  DerangementReport rep = analyze_group(g, caps.enum_cap);
  json j = io::report_to_json(rep);
  if (named.name) j["name"] = *named.name;
  out << j.dump(2) << "\n";
  if (meta) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    err << "analyze completed in " << ms << " ms\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& scope_name, const Caps& caps,
               std::ostream& out, std::ostream& err) {
  std::set<Scope> scopes;
  if (scope_name == "table1")
    scopes = {Scope::Table1};
  else if (scope_name == "table4")
    scopes = {Scope::Table4};
  else if (scope_name == "affine")
    scopes = {Scope::Affine};
  else if (scope_name == "nt")
    scopes = {Scope::NumberTheory};
  else if (scope_name == "all")
    scopes = {Scope::Table1, Scope::Table4, Scope::Affine, Scope::NumberTheory};
  else
    throw invalid_input("unknown scope: " + scope_name);

  auto results = run_rows(scopes, caps);
  json rows = json::array();
  for (const auto& r : results) rows.push_back(row_result_to_json(r));
  SweepSummary total = summarize(results);
  json j;
  j["scope"] = scope_name;
  j["rows"] = std::move(rows);
  j["summary"] = json{{"passed", total.passed},
                      {"failed", total.failed},
                      {"skipped", total.skipped}};
  out << j.dump(2) << "\n";
  err << "passed " << total.passed << " / failed " << total.failed
      << " / skipped " << total.skipped << "\n";
  return total.failed == 0 ? kExitOk : kExitFail;
}

int cmd_atlas(const std::string& family, std::uint64_t q,
              const std::string& action, bool list, std::ostream& out,
              std::ostream& /*err*/) {
  if (list) {
    json entries = json::array();
    for (const auto& e : atlas::catalog()) {
      json ej;
      ej["name"] = e.name;
      ej["family"] = e.family;
      ej["action"] = e.action;
      if (e.q) ej["q"] = e.q;
      ej["degree"] = e.degree;
      ej["order"] = e.order;
      ej["star"] = e.star_holds;
      if (e.star_holds) ej["r"] = e.star_r;
      ej["E"] = e.expected_orders;
      entries.push_back(std::move(ej));
    }
    out << entries.dump(2) << "\n";
    return kExitOk;
  }

  PermGroup g;
  std::string name;
  auto pick_line = [&](atlas::Flavor fl, const std::string& label) {
    if (action == "P1") {
      g = fl == atlas::Flavor::GammaL && label == "GammaL2"
              ? atlas::parabolic_normalizer_cosets_gamma(q).induced
              : atlas::projective_line_group(q, fl);
      name = label + "(" + std::to_string(q) + ") on P1";
    } else if (action == "D_split" || action == "D_nonsplit") {
      g = atlas::torus_normalizer_cosets(q, fl, action == "D_split").induced;
      name = label + "(" + std::to_string(q) + ") on " + action;
    } else {
      throw invalid_input("unsupported action for " + label + ": " + action);
    }
  };
  if (family == "L2")
    pick_line(atlas::Flavor::PSL, "L2");
  else if (family == "PGL2")
    pick_line(atlas::Flavor::PGL, "PGL2");
  else if (family == "GammaL2")
    pick_line(atlas::Flavor::GammaL, "GammaL2");
  else if (family == "L3") {
    if (action != "P1") throw invalid_input("L3 supports only the P1 action");
    g = atlas::projective_plane_group(q);
    name = "L3(" + std::to_string(q) + ") on P1";
  } else if (family == "M11") {
    g = atlas::m11_degree12();
    name = "M11 on cosets of L2(11)";
  } else if (family == "L2_7_S4") {
    g = atlas::l2_7_on_s4().induced;
    name = "L2(7) on cosets of S4";
  } else if (family == "AGL1") {
    g = as_permutation_group(atlas::agl1(q));
    name = "AGL1(" + std::to_string(q) + ") natural";
  } else if (family == "ASL2") {
    g = as_permutation_group(atlas::asl2(q));
    name = "ASL2(" + std::to_string(q) + ") natural";
  } else if (family == "S") {
    g = atlas::symmetric_group(q);
    name = "S" + std::to_string(q) + " natural";
  } else {
    throw invalid_input("unknown family: " + family);
  }
  out << io::group_to_json(g, name).dump(2) << "\n";
  return kExitOk;
}

int cmd_affine(const std::string& file, const Caps& caps, std::ostream& out,
               std::ostream& /*err*/) {
  AffinePair pair = io::load_affine_file(file);
  if (pair.group_order() > caps.max_order)
    throw cap_exceeded("affine group order " +
                       std::to_string(pair.group_order()) + " exceeds cap " +
                       std::to_string(caps.max_order));
  AffineDerangements d = affine_derangements(pair);
  AffineStar star = star_property_affine(pair);
  ExponentCriterion crit = exponent_criterion(pair);
  SemiregularResult semi = is_rprime_semiregular(pair, pair.p());

  json j;
  j["degree"] = pair.space_size();
  j["group_order"] = pair.group_order();
  j["transitive"] = true;
  j["primitive"] = pair.module_irreducible();
  j["derangement_count"] = d.count;
  std::uint64_t g = std::gcd(d.count, pair.group_order());
  j["delta"] = json{{"num", d.count / g}, {"den", pair.group_order() / g}};
  j["order_set"] = d.order_set;
  json starj;
  starj["holds"] = star.holds;
  if (star.r)
    starj["r"] = *star.r;
  else
    starj["r"] = nullptr;
  j["star"] = std::move(starj);
  bool elusive = true;
  for (std::uint64_t o : d.order_set) {
    std::uint64_t p = 0;
    if (is_prime_power_u64(o, &p) && o == p) elusive = false;
  }
  j["elusive"] = elusive;
  json fks = nullptr;
  for (std::uint64_t o : d.order_set)
    if (is_prime_power_u64(o)) {
      fks = o;
      break;
    }
  j["fks_witness"] = fks;
  j["semiregular"] = semi.semiregular;
  j["sylow_exponent"] = crit.sylow_exponent;
  // Frobenius iff only the identity stabilizes two points
  bool frobenius = true;
  for (std::uint64_t idx = 1; idx < pair.space_size() && frobenius; ++idx) {
    Vec v = pair.vector_at(idx);
    for (const Mat& t : pair.h_elements())
      if (!t.is_identity() && vec_mat(v, t) == v) frobenius = false;
  }
  j["frobenius"] = frobenius;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_nt(CLI::App* ppd_cmd, CLI::App* table2_cmd, CLI::App* nagell_cmd,
           CLI::App* ppe_cmd, std::uint64_t q, std::uint64_t e,
           std::uint64_t sweep, int eps, int row, std::uint64_t max_base,
           std::uint64_t max_exp, std::ostream& out) {
  json j;
  if (ppd_cmd->parsed()) {
    nt::PpdResult r = nt::ppd(q, e);
    j["q"] = r.q;
    j["e"] = r.e;
    if (r.largest_ppd)
      j["largest_ppd"] = big_to_json(*r.largest_ppd);
    else
      j["largest_ppd"] = nullptr;
    json all = json::array();
    for (const auto& p : r.all_ppds) all.push_back(big_to_json(p));
    j["all_ppds"] = std::move(all);
  } else if (table2_cmd->parsed()) {
    if (sweep > 0) {
      json hits = json::array();
      for (const auto& [rw, ep, qq] : nt::table2_sweep(sweep)) {
        json h;
        h["row"] = static_cast<int>(rw);
        h["eps"] = ep;
        h["q"] = qq;
        hits.push_back(std::move(h));
      }
      j["sweep_max"] = sweep;
      j["prime_power_cases"] = std::move(hits);
    } else {
      auto rw = static_cast<nt::Table2Row>(row);
      j["row"] = row;
      j["eps"] = eps;
      j["q"] = q;
      j["value"] = big_to_json(nt::table2_value(rw, eps, q));
      j["prime_power"] = nt::table2_check(rw, eps, q);
    }
  } else if (nagell_cmd->parsed()) {
    nt::NagellResult r = nt::nagell_check(q);
    j["q"] = q;
    j["d"] = r.d;
    if (r.r)
      j["r"] = big_to_json(*r.r);
    else
      j["r"] = nullptr;
    if (r.e)
      j["e"] = *r.e;
    else
      j["e"] = nullptr;
    j["f_is_3power"] = r.f_is_3power;
  } else if (ppe_cmd->parsed()) {
    json sols = json::array();
    for (const auto& s : nt::solve_prime_power_eq(max_base, max_exp)) {
      json sj;
      sj["r"] = s.r;
      sj["m"] = s.m;
      sj["s"] = s.s;
      sj["n"] = s.n;
      sj["cases"] = s.cases;
      sols.push_back(std::move(sj));
    }
    j["solutions"] = std::move(sols);
  } else {
    throw invalid_input("nt: choose one of ppd, table2, nagell, prime-power-eq");
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"derangement analysis for finite transitive permutation groups",
               "derange"};
  app.require_subcommand(1);

  Caps caps;
  apply_env_caps(caps);
  bool meta = false;
  app.add_flag("--meta", meta, "print runtime diagnostics to stderr");

  std::string group_file, subgroup_file;
  auto* analyze = app.add_subcommand("analyze", "analyze a group file");
  analyze->add_option("group", group_file, "group JSON file")->required();
  analyze->add_option("--subgroup", subgroup_file,
                      "analyze the coset action on this subgroup");

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "run a regression sweep");
  verify->add_option("scope", scope, "table1 | table4 | affine | nt | all");

  std::string family = "L2", action = "P1";
  std::uint64_t q = 8;
  bool list = false;
  auto* atlas_cmd = app.add_subcommand("atlas", "emit a named group as JSON");
  atlas_cmd->add_option("--family", family,
                        "L2 | PGL2 | GammaL2 | L3 | M11 | L2_7_S4 | AGL1 | "
                        "ASL2 | S");
  atlas_cmd->add_option("--q", q, "field size / parameter");
  atlas_cmd->add_option("--action", action, "P1 | D_split | D_nonsplit");
  atlas_cmd->add_flag("--list", list, "print the catalog");

  std::string affine_file;
  auto* affine_cmd =
      app.add_subcommand("affine", "analyze an affine pair from a matrix file");
  affine_cmd->add_option("file", affine_file, "matrix group JSON file")
      ->required();

  auto* nt_cmd = app.add_subcommand("nt", "number-theoretic checks");
  std::uint64_t nt_q = 2, nt_e = 2, nt_sweep = 0, max_base = 99, max_exp = 20;
  int nt_eps = 1, nt_row = 0;
  auto* ppd_cmd = nt_cmd->add_subcommand("ppd", "primitive prime divisors");
  ppd_cmd->add_option("--q", nt_q)->required();
  ppd_cmd->add_option("--e", nt_e)->required();
  auto* table2_cmd = nt_cmd->add_subcommand("table2", "prime-power quotients");
  table2_cmd->add_option("--sweep", nt_sweep, "sweep prime powers q <= value");
  table2_cmd->add_option("--row", nt_row, "row index 0..6");
  table2_cmd->add_option("--eps", nt_eps, "+1 or -1");
  table2_cmd->add_option("--q", nt_q);
  auto* nagell_cmd = nt_cmd->add_subcommand("nagell", "q^2+q+1 factor shape");
  nagell_cmd->add_option("--q", nt_q)->required();
  auto* ppe_cmd =
      nt_cmd->add_subcommand("prime-power-eq", "solve r^m + 1 = s^n");
  ppe_cmd->add_option("--max-base", max_base);
  ppe_cmd->add_option("--max-exp", max_exp);

  for (auto* sub : {analyze, verify, affine_cmd}) {
    sub->add_option("--max-order", caps.max_order,
                    "largest group order to enumerate");
    sub->add_option("--max-degree", caps.max_degree, "largest degree");
  }
  verify->add_flag("--enable-l3-7", caps.enable_l3_7,
                   "include the L3(7) row (order 1876896)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(group_file, subgroup_file, caps, meta, out, err);
    if (verify->parsed()) return cmd_verify(scope, caps, out, err);
    if (atlas_cmd->parsed())
      return cmd_atlas(family, q, action, list, out, err);
    if (affine_cmd->parsed()) return cmd_affine(affine_file, caps, out, err);
    if (nt_cmd->parsed())
      return cmd_nt(ppd_cmd, table2_cmd, nagell_cmd, ppe_cmd, nt_q, nt_e,
                    nt_sweep, nt_eps, nt_row, max_base, max_exp, out);
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  err << "error: no subcommand chosen\n";
  return kExitInput;
}

} // namespace derange::cli
