#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "derange/cli.hpp"
#include "derange/io.hpp"

namespace {

std::string data_path(const std::string& name) {
  return std::string(DERANGE_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = derange::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze golden outputs") {
  for (const char* name : {"s3_natural", "agl1_5", "m11_deg12"}) {
    auto res = run_cli({"analyze", data_path(std::string(name) + ".json")});
    CHECK(res.code == derange::cli::kExitOk);
    CHECK(res.out == read_file(data_path(std::string("golden_") + name + ".out")));
  }
}

TEST_CASE("analyze output is byte-stable across runs") {
  auto a = run_cli({"analyze", data_path("m11_deg12.json")});
  auto b = run_cli({"analyze", data_path("m11_deg12.json")});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("analyze --meta adds diagnostics outside the payload") {
  auto plain = run_cli({"analyze", data_path("s3_natural.json")});
  auto meta = run_cli({"--meta", "analyze", data_path("s3_natural.json")});
  CHECK(plain.out == meta.out);
  CHECK(meta.err.find("ms") != std::string::npos);
}

TEST_CASE("exit code 2 on malformed input") {
  auto missing = run_cli({"analyze", data_path("no_such_file.json")});
  CHECK(missing.code == derange::cli::kExitInput);

  auto bad = run_cli({"analyze", data_path("bad_generator.json")});
  CHECK(bad.code == derange::cli::kExitInput);
  CHECK(bad.err.find("bijection") != std::string::npos);

  auto intrans = run_cli({"analyze", data_path("intransitive.json")});
  CHECK(intrans.code == derange::cli::kExitInput);
}

TEST_CASE("exit code 3 when the cap is exceeded") {
  auto res =
      run_cli({"analyze", data_path("m11_deg12.json"), "--max-order", "1000"});
  CHECK(res.code == derange::cli::kExitCap);
  CHECK(res.err.find("1000") != std::string::npos);
}

TEST_CASE("exit code 1 is reserved for sweep failures") {
  auto res = run_cli({"verify", "nt"});
  CHECK(res.code == derange::cli::kExitOk);
  CHECK(res.err.find("failed 0") != std::string::npos);
}

TEST_CASE("nt subcommands") {
  auto ppd = run_cli({"nt", "ppd", "--q", "2", "--e", "6"});
  CHECK(ppd.code == 0);
  CHECK(ppd.out.find("\"largest_ppd\": null") != std::string::npos);

  auto nagell = run_cli({"nt", "nagell", "--q", "313"});
  CHECK(nagell.code == 0);
  CHECK(nagell.out.find("\"d\": 3") != std::string::npos);
  CHECK(nagell.out.find("\"r\": 181") != std::string::npos);
  CHECK(nagell.out.find("\"e\": 2") != std::string::npos);

  auto ppe = run_cli({"nt", "prime-power-eq", "--max-base", "31"});
  CHECK(ppe.code == 0);
  CHECK(ppe.out.find("\"solutions\"") != std::string::npos);

  auto t2 = run_cli({"nt", "table2", "--sweep", "50"});
  CHECK(t2.code == 0);
  CHECK(t2.out.find("prime_power_cases") != std::string::npos);
}

TEST_CASE("atlas emission round-trips through analyze") {
  auto listed = run_cli({"atlas", "--list"});
  CHECK(listed.code == 0);
  CHECK(listed.out.find("M11") != std::string::npos);

  auto g = run_cli({"atlas", "--family", "L2", "--q", "8", "--action", "P1"});
  CHECK(g.code == 0);
  CHECK(g.out.find("\"degree\": 9") != std::string::npos);
}

TEST_CASE("affine command emits the extended report") {
  auto res = run_cli({"affine", data_path("sl2_3_module.json")});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"semiregular\": true") != std::string::npos);
  CHECK(res.out.find("\"sylow_exponent\": 3") != std::string::npos);
  CHECK(res.out.find("\"frobenius\": false") != std::string::npos);
  CHECK(res.out.find("\"order_set\": [\n    3\n  ]") != std::string::npos);

  auto frob = run_cli({"affine", data_path("agl1_7_module.json")});
  CHECK(frob.code == 0);
  CHECK(frob.out.find("\"frobenius\": true") != std::string::npos);
}

TEST_CASE("subgroup option analyzes the coset action") {
  auto res = run_cli({"analyze", data_path("l2_8.json"), "--subgroup",
                      data_path("l2_8_d18.json")});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"degree\": 28") != std::string::npos);
  CHECK(res.out.find("\"r\": 7") != std::string::npos);
}

TEST_CASE("group files round-trip bit-exactly") {
  for (const char* name : {"s3_natural.json", "m11_deg12.json", "l2_8.json"}) {
    std::string text = read_file(data_path(name));
    auto parsed = nlohmann::ordered_json::parse(text);
    auto named = derange::io::group_from_json(parsed);
    auto emitted = derange::io::group_to_json(named.group, named.name);
    CHECK(emitted == parsed);
    CHECK(emitted.dump(2) == parsed.dump(2));
  }
}

TEST_CASE("verify sweeps emit sorted rows and a summary") {
  auto res = run_cli({"verify", "affine"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"summary\"") != std::string::npos);
  // row ids appear in sorted order
  std::size_t first = res.out.find("AFF.AGL1(3)");
  std::size_t last = res.out.find("AFF.SL2(7)");
  CHECK(first != std::string::npos);
  CHECK(last != std::string::npos);
  CHECK(first < last);
}
