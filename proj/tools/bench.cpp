// Times the serial reference scan against the OpenMP kernel on the larger
// catalog entries.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "derange/affine.hpp"
#include "derange/atlas.hpp"
#include "derange/scan.hpp"

using namespace derange;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_group(const std::string& name, const PermGroup& g) {
  ElementScan serial, parallel;
  double ts = time_ms([&] { serial = scan_elements_serial(g); });
  double tp = time_ms([&] { parallel = scan_elements_parallel(g); });
  bool same = scans_equal(serial, parallel);
  std::cout << std::left << std::setw(34) << name << " |G| " << std::setw(9)
            << g.order() << " serial " << std::setw(9) << std::fixed
            << std::setprecision(1) << ts << " ms  parallel " << std::setw(9)
            << tp << " ms  speedup " << std::setprecision(2) << (ts / tp)
            << (same ? "" : "  MISMATCH") << "\n";
}

void bench_affine(const std::string& name, const AffinePair& pair) {
  AffineDerangements serial, parallel;
  double ts =
      time_ms([&] { serial = affine_derangements(pair, ScanMode::Serial); });
  double tp =
      time_ms([&] { parallel = affine_derangements(pair, ScanMode::Parallel); });
  bool same = serial.count == parallel.count &&
              serial.order_counts == parallel.order_counts;
  std::cout << std::left << std::setw(34) << name << " |G| " << std::setw(9)
            << pair.group_order() << " serial " << std::setw(9) << std::fixed
            << std::setprecision(1) << ts << " ms  parallel " << std::setw(9)
            << tp << " ms  speedup " << std::setprecision(2) << (ts / tp)
            << (same ? "" : "  MISMATCH") << "\n";
}

} // namespace

int main(int argc, char** argv) {
  bool big = argc > 1 && std::string(argv[1]) == "--big";

  bench_group("L2(49) on P1", atlas::projective_line_group(49, atlas::Flavor::PSL));
  bench_group("L3(4) on P1", atlas::projective_plane_group(4));
  bench_group("M11 degree 12", atlas::m11_degree12());
  bench_group("GammaL2(32) on N(D66)",
              atlas::torus_normalizer_cosets(32, atlas::Flavor::GammaL, false)
                  .induced);
  if (big) bench_group("L3(5) on P1", atlas::projective_plane_group(5));

  bench_affine("ASL2(7)", atlas::asl2(7));
  bench_affine("SL2(4) natural", atlas::sl2_natural(4));
  return 0;
}
