// Compares the serial reference kernels against the OpenMP ones on a fixed
// random workload and reports timings. Results must agree exactly.

#include <chrono>
#include <iostream>
#include <random>

#include "ualg/corpus.hpp"

using namespace ualg;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
  std::mt19937_64 rng(42);
  Limits limits;
  limits.tolerance_enum_max = 6;

  // size-6 algebras make the exhaustive relation scan the dominant cost
  FiniteAlgebra a = random_algebra(rng, 6, 6);
  std::size_t serial_count = 0, parallel_count = 0;
  double t_serial = time_ms([&] { serial_count = enumerate_tolerances_serial(a, limits).size(); }, 3);
  double t_parallel = time_ms([&] { parallel_count = enumerate_tolerances(a, limits).size(); }, 3);
  if (serial_count != parallel_count) {
    std::cerr << "kernel mismatch: serial " << serial_count << " vs parallel " << parallel_count
              << "\n";
    return 1;
  }
  std::cout << "enumerate_tolerances (n=6, " << serial_count << " tolerances)\n"
            << "  serial:   " << t_serial << " ms\n"
            << "  parallel: " << t_parallel << " ms\n"
            << "  speedup:  " << t_serial / t_parallel << "x\n";

  bool sc = false, pc = false;
  BinaryRelation full = BinaryRelation::full(a.size());
  double c_serial = time_ms([&] { sc = is_compatible_serial(a, full); }, 200);
  double c_parallel = time_ms([&] { pc = is_compatible(a, full); }, 200);
  if (sc != pc) {
    std::cerr << "compatibility kernel mismatch\n";
    return 1;
  }
  std::cout << "is_compatible (full relation)\n"
            << "  serial:   " << c_serial << " ms\n"
            << "  parallel: " << c_parallel << " ms\n";
  return 0;
}
