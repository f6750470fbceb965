#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "derange/perm_group.hpp"

namespace derange {

enum class Scope { Table1, Table4, Affine, NumberTheory };

struct Caps {
  std::uint64_t max_order = 2'000'000;
  std::uint64_t max_degree = 100'000;
  std::uint64_t enum_cap = PermGroup::kDefaultEnumCap;
  bool enable_l3_7 = false;
};

struct TableRowResult {
  std::string row_id;
  std::map<std::string, std::string> parameters;
  bool constructed = false;
  std::vector<std::uint64_t> expected_E;
  std::vector<std::uint64_t> computed_E;
  std::uint64_t expected_r = 0;  // 0 encodes "star must fail"
  std::optional<std::uint64_t> computed_r;
  bool computed_star = false;
  std::string verdict;  // PASS | FAIL | SKIPPED
  std::string reason;   // for SKIPPED, and detail on FAIL
};

struct TableRow {
  std::string row_id;
  std::string description;  // family, subgroup and parameter condition
  std::set<Scope> scopes;
  std::map<std::string, std::string> parameters;
  std::uint64_t expected_r = 0;
  std::vector<std::uint64_t> expected_E;
  bool expect_star = true;
  std::optional<std::string> skip_reason;  // row is documentation-only
  std::uint64_t order_bound = 0;           // closed-form order, for cap checks
  // builders; exactly one is set for runnable rows
  std::function<PermGroup()> build_perm;
  std::function<TableRowResult(const Caps&)> run_custom;
};

std::vector<TableRow> registry_rows(const Caps& caps);
/// Runs every registry row belonging to at least one of the scopes, each
/// once, in parallel; results come back sorted by row id.
std::vector<TableRowResult> run_rows(const std::set<Scope>& scopes,
                                     const Caps& caps);
std::vector<TableRowResult> run_rows(Scope scope, const Caps& caps);

struct SweepSummary {
  std::size_t passed = 0, failed = 0, skipped = 0;
};
SweepSummary summarize(const std::vector<TableRowResult>& rows);

} // namespace derange
