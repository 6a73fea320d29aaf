// Wall-clock comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "f4/continuation.hpp"
#include "f4/series.hpp"
#include "f4/tpr.hpp"

using namespace f4;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-22s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  const HypergeometricParams p{0.31, 0.47, 0.62, 0.79};
  std::printf("threads: %d\n", omp_get_max_threads());

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 0.15);
  std::vector<Point2> pts(4000);
  for (auto& x : pts) x = {Complex(u(rng), u(rng) - 0.075), Complex(u(rng), u(rng) - 0.075)};
  row("f4_batch", best_of(3, [&] { f4_batch_serial(p, pts, 1e-14); }),
      best_of(3, [&] { f4_batch(p, pts, 1e-14); }));

  std::vector<HypergeometricParams> ps;
  for (int i = 0; i < 200; ++i) ps.push_back(random_generic_params(rng));
  const Point2 x{0.04, 0.06};
  row("tpr_sweep", best_of(3, [&] { tpr_sweep_serial(ps, x, 1, 1e-12); }),
      best_of(3, [&] { tpr_sweep(ps, x, 1, 1e-12); }));

  row("verify_all_loops", best_of(3, [&] { verify_all_loops_serial(p, 1e-6); }),
      best_of(3, [&] { verify_all_loops(p, 1e-6); }));
  return 0;
}
