// Serial reference vs OpenMP sweep kernels.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "leemodel/sweep.hpp"

using namespace leemodel;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = INFINITY;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, std::size_t n, double serial, double parallel) {
  std::printf("%-22s %8zu %12.4f %12.4f %8.2fx\n", name, n, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", parallel_threads());
  std::printf("%-22s %8s %12s %12s %9s\n", "kernel", "points", "serial ms", "openmp ms", "speedup");

  const PhysicalParams phys(1.0, 0.5, CouplingSq::finite(4.0 * 3.14159265358979323846));
  const auto ks = momentum_grid(1e-3, 1e3, 200000, Spacing::Log);
  volatile double sink = 0;
  const double s1 = best_of(5, [&] { sink = sink + sweep_serial(phys, ks).back().sigma; });
  const double p1 = best_of(5, [&] { sink = sink + sweep_parallel(phys, ks).back().sigma; });
  row("renormalized", ks.size(), s1, p1);

  for (auto ff : {FormFactor::sharp_cutoff(20.0), FormFactor::gaussian(20.0)}) {
    const auto p = make_params(1, 1, 1, 1, ff);
    const auto kr = momentum_grid(0.05, 15.0, 400, Spacing::Linear);
    const double s = best_of(3, [&] { sink = sink + regulated_sweep_serial(p, kr).back(); });
    const double q = best_of(3, [&] { sink = sink + regulated_sweep_parallel(p, kr).back(); });
    row(ff.kind() == FormFactor::Kind::Gaussian ? "regulated gaussian" : "regulated sharp", kr.size(), s, q);
  }

  std::vector<double> gs;
  for (int i = 0; i < 200000; ++i) gs.push_back(std::pow(10.0, 2.0 + 4.0 * i / 199999.0));
  const double s3 = best_of(5, [&] { sink = sink + coupling_sweep_serial(2.0, 0.5, 1.0, gs).back(); });
  const double p3 = best_of(5, [&] { sink = sink + coupling_sweep_parallel(2.0, 0.5, 1.0, gs).back(); });
  row("coupling", gs.size(), s3, p3);
  return 0;
}
