// Timing comparison of the Steinberg kernels: the shared-denominator
// reduction (OpenMP-parallel when built with it) against the serial
// pairwise reference, plus a full catalog verification pass. Results print
// as a small table; exact outputs are cross-checked while timing.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/poincare.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace coxgrowth;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : default_data_dir();
  const std::vector<CatalogEntry>& entries = catalog_entries(dir);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n";
#endif

  std::cout << std::left << std::setw(14) << "system" << std::setw(6) << "rank" << std::setw(14)
            << "kernel [s]" << std::setw(14) << "reference [s]" << "match\n";

  double kernel_total = 0, reference_total = 0;
  for (const CatalogEntry& e : entries) {
    if (e.rank < 8) continue;  // the small systems time below clock noise
    auto t0 = Clock::now();
    PoincareSeries fast = steinberg_poincare(e.matrix);
    double kernel = seconds_since(t0);
    t0 = Clock::now();
    PoincareSeries slow = steinberg_poincare_serial(e.matrix);
    double reference = seconds_since(t0);
    kernel_total += kernel;
    reference_total += reference;
    std::cout << std::setw(14) << e.id << std::setw(6) << e.rank << std::setw(14) << kernel
              << std::setw(14) << reference << (fast.rf == slow.rf ? "yes" : "NO") << "\n";
  }
  std::cout << std::setw(20) << "total" << std::setw(14) << kernel_total << std::setw(14)
            << reference_total << "\n\n";

  auto t0 = Clock::now();
  VerificationReport report = verify_catalog(entries);
  std::cout << "catalog verify (" << report.entries_checked << " entries): " << seconds_since(t0)
            << " s, " << report.entries_passed << " passed\n";
  return report.all_ok() ? 0 : 1;
}
