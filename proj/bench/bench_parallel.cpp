// Times the OpenMP kernels against their serial reference implementations:
// literal spectrum of a materialized DHM support, the per-prime fast sweep,
// and a prime-range nonexistence run.
//
// Usage: cyclo6_bench [p] [range_max]   (defaults: 2017 2000)

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclo6/ads_search.hpp"
#include "cyclo6/sequences.hpp"

using namespace cyclo6;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double ms(F&& fn) {
  const auto t0 = clock_type::now();
  fn();
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial << " ms" << std::setw(10)
            << parallel << " ms   x" << std::setprecision(2) << serial / parallel << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2017;
  const uint64_t range_max = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2000;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "p = " << p << ", range  13.." << range_max << "\n\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << "   speedup\n";

  const CyclotomyContext ctx = build_context(p, 6);
  const SupportSet support = build_dhm_support(ctx, IndexSet::of({0, 1, 2}, 6),
                                               IndexSet::of({0, 4, 5}, 6), Variant::C);

  DistanceSpectrum s1, s2;
  const double spec_serial = ms([&] { s1 = spectrum_serial(support); });
  const double spec_parallel = ms([&] { s2 = spectrum(support); });
  if (!(s1 == s2)) {
    std::cerr << "spectrum mismatch between serial and parallel paths\n";
    return 1;
  }
  report("literal spectrum", spec_serial, spec_parallel);

  const BipolarSequence seq = support_to_sequence(support);
  AcfProfile a1, a2;
  const double acf_serial = ms([&] { a1 = periodic_autocorrelation_serial(seq); });
  const double acf_parallel = ms([&] { a2 = periodic_autocorrelation(seq); });
  if (a1.offpeak != a2.offpeak) {
    std::cerr << "autocorrelation mismatch between serial and parallel paths\n";
    return 1;
  }
  report("periodic autocorrelation", acf_serial, acf_parallel);

  SweepOptions serial_opt;
  serial_opt.parallel = false;
  SweepOptions parallel_opt;
  SearchReport r1, r2;
  const double sweep_serial = ms([&] { r1 = sweep_dhm(ctx, serial_opt); });
  const double sweep_parallel = ms([&] { r2 = sweep_dhm(ctx, parallel_opt); });
  if (r1.rows.size() != r2.rows.size() || r1.ads_hits != r2.ads_hits) {
    std::cerr << "sweep mismatch between serial and parallel paths\n";
    return 1;
  }
  report("per-prime fast sweep", sweep_serial, sweep_parallel);

  RangeSweepReport n1, n2;
  const double range_serial = ms([&] { n1 = verify_nonexistence(range_max, serial_opt); });
  const double range_parallel = ms([&] { n2 = verify_nonexistence(range_max, parallel_opt); });
  if (n1.total_rows != n2.total_rows || n1.total_hits != n2.total_hits) {
    std::cerr << "range sweep mismatch between serial and parallel paths\n";
    return 1;
  }
  report("nonexistence range sweep", range_serial, range_parallel);

  std::cout << "\nrange sweep: " << n2.primes.size() << " primes, " << n2.total_rows
            << " rows, " << n2.total_hits << " hits\n";
  return 0;
}
