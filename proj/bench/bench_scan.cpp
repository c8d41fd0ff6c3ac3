// Times the boundary-determinant scan, serial against OpenMP, and checks that
// both produce identical values.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "saext/bcclassify.hpp"
#include "saext/spectrum.hpp"

using namespace saext;

namespace {

template <class F>
double seconds(F&& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int points = argc > 1 ? std::atoi(argv[1]) : 2000;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  const auto p = Potential::harmonic(1.0, 1.0);
  BcFamily family;
  family.name = BcName::automorphic;
  family.K = cplx{0.6, 0.8};
  const Matrix2c U = synthesize(family).matrix();

  std::vector<double> energies(points);
  for (int i = 0; i < points; ++i) energies[i] = -2.0 + 200.0 * i / (points - 1);
  const OdeOptions ode;

  std::vector<double> serial, parallel;
  const double ts = seconds([&] { serial = scan_det_serial(p, U, energies, ode); }, repeats);
  const double tp = seconds([&] { parallel = scan_det_parallel(p, U, energies, ode, threads); }, repeats);

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) identical = serial[i] == parallel[i];

  std::printf("points       %d\n", points);
  std::printf("threads      %d\n", threads);
  std::printf("serial       %.4f s\n", ts);
  std::printf("parallel     %.4f s\n", tp);
  std::printf("speedup      %.2fx\n", ts / tp);
  std::printf("identical    %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
