// Compares the serial reference sweep against the blocked (OpenMP) kernel on
// stacked spheres of growing size, and checks that their reports agree.
//
// Usage: rigidity_bench [max_n]   (default 22; the sweep is 2^n)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pm/rigidity.hpp"
#include "pm/stacked.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pm;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 22;
#ifdef _OPENMP
  std::cout << "openmp: yes, max threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: no (blocked kernel runs on one thread)\n";
#endif
  std::cout << "n      serial      blocked     speedup  verdict\n";

  bool all_match = true;
  for (int n = 14; n <= max_n; n += 2) {
    Complex c = generate_stacked(StackScript::random(3, n - 5, 1234 + n));

    SweepOptions serial;
    serial.serial = true;
    serial.max_vertices = n;
    auto t0 = std::chrono::steady_clock::now();
    RigidityReport ref = is_minimally_q_rigid(c, 4, serial);
    double ts = seconds_since(t0);

    SweepOptions blocked;
    blocked.max_vertices = n;
    t0 = std::chrono::steady_clock::now();
    RigidityReport par = is_minimally_q_rigid(c, 4, blocked);
    double tp = seconds_since(t0);

    bool match = ref.verdict == par.verdict && ref.minimal == par.minimal &&
                 ref.witness == par.witness && ref.subsets_examined == par.subsets_examined &&
                 ref.subsets_pruned == par.subsets_pruned;
    all_match &= match;

    std::printf("%-6d %9.4fs  %9.4fs  %7.2fx  %s%s\n", n, ts, tp, ts / tp,
                ref.verdict ? "rigid" : "flexible", match ? "" : "  MISMATCH");
  }
  if (!all_match) {
    std::cout << "kernel disagreement detected\n";
    return 1;
  }
  return 0;
}
