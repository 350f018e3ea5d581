// Serial vs OpenMP timings of the data-parallel kernels.
//
//   bench_kernels [n_arena] [n_verify] [n_oracle]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/kernels.hpp"
#include "ringgather/verifier.hpp"

using namespace ringgather;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* name, double serial, double omp, bool same) {
  std::printf("%-28s %10.2f %10.2f %7.2fx  %s\n", name, serial, omp, serial / omp, same ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int n_arena = argc > 1 ? std::atoi(argv[1]) : 60;
  const int n_verify = argc > 2 ? std::atoi(argv[2]) : 100;
  const int n_oracle = argc > 3 ? std::atoi(argv[3]) : 30;
  const int reps = 3;

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    const auto classes = enumerate_classes({n_arena, 3});
    std::vector<ClassExpansion> a, b;
    const double ts = best_of(reps, [&] { a = kernels::expand_classes_serial(classes, Semantics::SSYNC); });
    const double tp = best_of(reps, [&] { b = kernels::expand_classes_omp(classes, Semantics::SSYNC); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].options.size() == b[i].options.size();
      for (std::size_t j = 0; same && j < a[i].options.size(); ++j) {
        same = a[i].options[j].decisions == b[i].options[j].decisions &&
               a[i].options[j].successors == b[i].options[j].successors;
      }
    }
    row(("arena expand n=" + std::to_string(n_arena)).c_str(), ts, tp, same);
  }
  {
    const RingParams p{n_verify, 3};
    const auto classes = enumerate_classes(p);
    const AlgorithmTable t = AlgorithmTable::builtin_gather3(p);
    std::vector<ClassExpansionUnderTable> a, b;
    const double ts = best_of(reps, [&] { a = kernels::expand_under_table_serial(classes, t, Semantics::SSYNC); });
    const double tp = best_of(reps, [&] { b = kernels::expand_under_table_omp(classes, t, Semantics::SSYNC); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].decisions == b[i].decisions && a[i].branches.size() == b[i].branches.size();
      for (std::size_t j = 0; same && j < a[i].branches.size(); ++j) {
        same = a[i].branches[j].next == b[i].branches[j].next && a[i].branches[j].movers == b[i].branches[j].movers;
      }
    }
    row(("verify expand n=" + std::to_string(n_verify)).c_str(), ts, tp, same);
  }
  {
    const RingParams p{n_oracle, 3};
    const auto configs = enumerate_configurations(p);
    std::vector<RawExpansion> a, b;
    const double ts = best_of(reps, [&] { a = kernels::expand_raw_serial(configs); });
    const double tp = best_of(reps, [&] { b = kernels::expand_raw_omp(configs); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].weight == b[i].weight && a[i].successors == b[i].successors;
    }
    row(("oracle expand n=" + std::to_string(n_oracle)).c_str(), ts, tp, same);

    std::vector<bool> target(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      target[i] = configs[i].is_gathered();
    }
    auto solve = [&](bool omp) {
      std::vector<Value> in(configs.size()), out(configs.size());
      bool changed = true;
      while (changed) {
        changed = omp ? kernels::bellman_sweep_omp(a, target, in, out)
                      : kernels::bellman_sweep_serial(a, target, in, out);
        in.swap(out);
      }
      return in;
    };
    std::vector<Value> va, vb;
    const double ss = best_of(reps, [&] { va = solve(false); });
    const double sp = best_of(reps, [&] { vb = solve(true); });
    row(("oracle sweeps n=" + std::to_string(n_oracle)).c_str(), ss, sp, va == vb);
  }
  return 0;
}
