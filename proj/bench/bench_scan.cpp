// serial reference scan vs the OpenMP kernel, same X grid, same answers

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmcensus/family.hpp"

using cmcensus::FamilyCounts;

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int top = argc > 1 ? std::atoi(argv[1]) : 8;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d\n%-8s %12s %12s %9s %10s\n", threads, "X", "reference_s", "kernel_s", "speedup", "E");
  int rc = 0;
  std::uint64_t x = 1000;
  for (int e = 3; e <= top; ++e, x *= 10) {
    FamilyCounts ref;
    FamilyCounts par;
    const double tr = seconds([&] { ref = cmcensus::enumerate_E_reference(x); });
    const double tp = seconds([&] { par = cmcensus::enumerate_E(x); });
    std::printf("1e%-6d %12.4f %12.4f %9.2f %10llu%s\n", e, tr, tp, tp > 0 ? tr / tp : 0.0,
                static_cast<unsigned long long>(par.e_count), ref == par ? "" : "  MISMATCH");
    if (!(ref == par)) rc = 1;
  }
  return rc;
}
