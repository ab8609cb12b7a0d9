// Timing harness for the delta sweep: serial reference vs the OpenMP kernel,
// with an output-identity check (the sweep must be bit-deterministic for any
// worker count).

#include <chrono>
#include <cstdio>
#include <string>

#include "rosenau/csv.hpp"
#include "rosenau/problem.hpp"
#include "rosenau/shooting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rosenau;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = 24;
  double tol = 1e-6;
  if (argc > 1) points = std::atoi(argv[1]);
  if (argc > 2) tol = std::atof(argv[2]);

  const WaveProblem p = WaveProblem::validate(FluxSpec::burgers(), 2.0, 0.0, 1.0);
  const auto grid = make_grid(5e-3, 2.0, points, true);

  std::printf("delta sweep, alpha=1, %d points, tol=%g\n", points, tol);

  auto t0 = Clock::now();
  const auto serial = boundary_curve_serial(p, grid, tol, false);
  const double t_serial = seconds_since(t0);
  std::printf("  serial reference : %8.3f s\n", t_serial);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  t0 = Clock::now();
  const auto parallel = boundary_curve(p, grid, tol, 0);
  const double t_parallel = seconds_since(t0);
  std::printf("  openmp (%d thread%s): %8.3f s   speedup %.2fx\n", threads,
              threads == 1 ? "" : "s", t_parallel, t_serial / t_parallel);

  const std::string a = curve_csv(serial);
  const std::string b = curve_csv(parallel);
  if (a != b) {
    std::printf("  MISMATCH: serial and parallel sweeps differ\n");
    return 1;
  }
  std::printf("  outputs identical: yes\n");
  return 0;
}
