// Wall-clock comparison of the serial reference runners and their OpenMP
// versions. Each pair is also checked for identical results.
//
//   bench_sweeps [trials]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "graph_enum.hpp"
#include "surfgerm/etypes.hpp"
#include "surfgerm/sweeps.hpp"

using namespace surfgerm;

namespace {

template <class F>
auto timed(double& secs, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.3f %10.3f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 500;
  std::printf("threads: %d, trials: %zu\n", omp_get_max_threads(), trials);
  std::printf("%-28s %10s %10s %9s\n", "sweep", "serial s", "omp s", "speedup");
  bool ok = true;
  double s = 0, p = 0;

  const auto as = timed(s, [] { return verify_appendix_serial(2, 10, etype_families()); });
  const auto ap = timed(p, [] { return verify_appendix(2, 10); });
  ok &= row("appendix m=2..10", s, p, as == ap);

  const auto cs = timed(s, [&] { return verify_continuants(trials, 7, Exec::Serial); });
  const auto cp = timed(p, [&] { return verify_continuants(trials, 7, Exec::Parallel); });
  ok &= row("continuants", s, p, cs == cp);

  const auto ls = timed(s, [&] { return verify_lemmas(trials, 7, Exec::Serial); });
  const auto lp = timed(p, [&] { return verify_lemmas(trials, 7, Exec::Parallel); });
  ok &= row("lemmas", s, p, ls == lp);

  const auto graphs = enumerate::connected_graphs(5, 2, 4, true);
  const auto fs = timed(s, [&] { return enumerate::compare_fundamental(graphs, 6, false); });
  const auto fp = timed(p, [&] { return enumerate::compare_fundamental(graphs, 6, true); });
  ok &= row("fundamental cycle vs box 6", s, p, fs == fp);
  return ok ? 0 : 1;
}
