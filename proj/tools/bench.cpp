// Benchmark of the OpenMP kernels against their serial reference
// implementations: structure-constant counting and group-algebra
// convolution.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "charblock/classalg.hpp"
#include "charblock/chartab.hpp"
#include "charblock/fpg.hpp"

using namespace charblock;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_structure_constants(const char *name, const GroupData &gd,
                               int reps) {
  auto t0 = Clock::now();
  StructureConstants ser;
  for (int i = 0; i < reps; ++i)
    ser = structure_constants_serial(gd.G, gd.cc);
  double serial_ms = ms_since(t0) / reps;

  t0 = Clock::now();
  StructureConstants par;
  for (int i = 0; i < reps; ++i)
    par = structure_constants(gd.G, gd.cc);
  double parallel_ms = ms_since(t0) / reps;

  bool equal = ser.a == par.a;
  std::printf("%-28s %10.2f ms %10.2f ms   %5.2fx  %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              equal ? "match" : "MISMATCH");
}

void bench_convolution(const char *name, const GroupData &gd, int p,
                       int reps) {
  StarMap star(p, gd.G.exponent());
  GroupAlgebra A(gd, star.field());
  // dense operands: sums of a few class sums
  AlgebraElement a = A.class_sum(0);
  AlgebraElement b = A.one();
  for (int k = 0; k < gd.cc.count(); ++k) {
    a = A.add(a, A.class_sum(k));
    if (k % 2 == 0)
      b = A.add(b, A.class_sum(k));
  }

  auto t0 = Clock::now();
  AlgebraElement ser = A.zero();
  for (int i = 0; i < reps; ++i)
    ser = A.convolve_serial(a, b);
  double serial_ms = ms_since(t0) / reps;

  t0 = Clock::now();
  AlgebraElement par = A.zero();
  for (int i = 0; i < reps; ++i)
    par = A.convolve(a, b);
  double parallel_ms = ms_since(t0) / reps;

  std::printf("%-28s %10.2f ms %10.2f ms   %5.2fx  %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              ser == par ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  GroupData s4 = make_group_data(PermGroup::generated(
      {Perm::from_cycles(4, "(1,2)"), Perm::from_cycles(4, "(1,2,3,4)")}));
  GroupData a5 = make_group_data(PermGroup::generated(
      {Perm::from_cycles(5, "(1,2,3,4,5)"), Perm::from_cycles(5, "(1,2,3)")}));
  GroupData psl27 = make_group_data(
      PermGroup::generated({Perm::from_cycles(8, "(1,2,3,4,5,6,7)"),
                            Perm::from_cycles(8, "(1,8)(2,7)(3,4)(5,6)")}));
  // S5 gives the kernels something larger to chew on (|G| = 120)
  GroupData s5 = make_group_data(PermGroup::generated(
      {Perm::from_cycles(5, "(1,2)"), Perm::from_cycles(5, "(1,2,3,4,5)")}));

  bench_structure_constants("structure constants S4", s4, 20);
  bench_structure_constants("structure constants A5", a5, 10);
  bench_structure_constants("structure constants S5", s5, 5);
  bench_structure_constants("structure constants PSL2(7)", psl27, 5);

  bench_convolution("convolution F_2[A5]", a5, 2, 10);
  bench_convolution("convolution F_3[S5]", s5, 3, 5);
  bench_convolution("convolution F_2[PSL2(7)]", psl27, 2, 5);
  return 0;
}
