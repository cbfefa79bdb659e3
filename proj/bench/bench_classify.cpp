// Serial reference path against the OpenMP kernels on the same work.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "isocodes/classify.hpp"
#include "isocodes/equivalence.hpp"
#include "isocodes/selfdual.hpp"

using namespace isocodes;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* what, std::size_t n, double serial, double parallel, bool same) {
  std::printf("%-22s n=%-3zu serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", what, n, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP timings"};
  std::vector<std::size_t> lengths{10, 12, 14};
  int jobs = 0;
  int reps = 3;
  app.add_option("--n", lengths, "lengths to run (even, <= 16)");
  app.add_option("--jobs", jobs, "threads for the parallel path (0 = all)");
  app.add_option("--reps", reps, "repetitions, best time reported");
  CLI11_PARSE(app, argc, argv);

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::printf("threads: %d\n", threads);
  const Exec serial{false, 1};
  const Exec parallel{true, jobs};
  bool ok = true;
  for (std::size_t n : lengths) {
    SelfDualSet a, b;
    const double gs = best_of(reps, [&] { a = generate_selfdual_reps(n, serial); });
    const double gp = best_of(reps, [&] { b = generate_selfdual_reps(n, parallel); });
    const bool g_same = a.reps == b.reps && a.aut_orders == b.aut_orders;
    row("self-dual generation", n, gs, gp, g_same);

    // canonical labeling of every odd pair, the classification's inner kernel
    std::vector<LinearCode> work;
    for (const auto& k : a.reps) {
      for (const auto& k0 : complements_of_ones(k, serial)) {
        auto [l, lp] = odd_pair_from_complement(k0);
        work.push_back(l);
        work.push_back(lp);
      }
    }
    std::vector<CanonicalCert> cs, cp;
    const double ks = best_of(reps, [&] { cs = canonical_forms_serial(work); });
    const double kp = best_of(reps, [&] { cp = canonical_forms_parallel(work, jobs); });
    bool k_same = cs.size() == cp.size();
    for (std::size_t i = 0; k_same && i < cs.size(); ++i) k_same = cs[i].canon == cp[i].canon && cs[i].aut_order == cp[i].aut_order;
    row("canonical forms", n, ks, kp, k_same);

    std::vector<CodeClass> xs, xp;
    const double cs_t = best_of(reps, [&] { xs = classify_odd_lagrangians(a, serial); });
    const double cp_t = best_of(reps, [&] { xp = classify_odd_lagrangians(a, parallel); });
    bool c_same = xs.size() == xp.size();
    for (std::size_t i = 0; c_same && i < xs.size(); ++i) c_same = xs[i].rep == xp[i].rep;
    row("classification", n, cs_t, cp_t, c_same);
    ok = ok && g_same && k_same && c_same;
  }
  return ok ? 0 : 1;
}
