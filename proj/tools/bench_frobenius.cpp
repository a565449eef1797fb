// Benchmark of the bivariate power kernel: serial reference vs OpenMP gather.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "teichfuchs/charp.hpp"

using namespace teichfuchs;

namespace {

template <class F>
double time_of(F&& f, int reps) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    long p = argc > 1 ? std::atol(argv[1]) : 13;
    int n = argc > 2 ? std::atoi(argv[2]) : 2;
    int reps = argc > 3 ? std::atoi(argv[3]) : 3;
    FamilyModel fm = family(17, 1);
    PrimeContext ctx(17, p, n);
    ModBivar g = reduce_bivariate(fm, ctx);
    u64 e = (ctx.pn - 1) / 2;
    std::printf("g^%llu mod %ld^%d (x-degree %llu), %d thread(s)\n",
                (unsigned long long)e, p, n, (unsigned long long)(5 * e),
                omp_get_max_threads());
    ModBivar ref, par;
    double ts = time_of([&] { ref = bivar_power_serial(g, e); }, reps);
    double tp = time_of([&] { par = bivar_power_parallel(g, e); }, reps);
    bool same = ref.c0 == par.c0 && ref.c1 == par.c1;
    std::printf("serial reference: %8.3f s\n", ts);
    std::printf("openmp kernel:    %8.3f s  (speedup %.2fx)\n", tp, ts / tp);
    std::printf("results identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
