// Compares the serial reference kernels against their OpenMP variants and
// reports timings. Exits nonzero if the two ever disagree.

#include "ternary/kernels.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ternary::kernels;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int mismatches = 0;

void bench_witness(std::int64_t a, std::int64_t b, std::int64_t c,
                   const WitnessBox& box) {
    std::optional<Triple> serial, parallel;
    double ts = time_ms([&] { serial = witness_search_serial(a, b, c, box); });
    double tp = time_ms([&] { parallel = witness_search_parallel(a, b, c, box); });
    if (serial != parallel) {
        std::printf("MISMATCH witness (%" PRId64 ",%" PRId64 ",%" PRId64 ")\n", a, b, c);
        ++mismatches;
        return;
    }
    std::printf("witness (%8" PRId64 ",%8" PRId64 ",%10" PRId64 ")  box %6" PRId64
                "x%-6" PRId64 "  %-5s  serial %8.2f ms  omp %8.2f ms  x%.2f\n",
                a, b, c, box.by, box.bz, serial ? "hit" : "empty", ts, tp,
                tp > 0 ? ts / tp : 0.0);
}

void bench_mod_pk(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p,
                  std::int64_t q) {
    bool serial = false, parallel = false;
    double ts = time_ms([&] { serial = mod_pk_search_serial(a, b, c, p, q); });
    double tp = time_ms([&] { parallel = mod_pk_search_parallel(a, b, c, p, q); });
    if (serial != parallel) {
        std::printf("MISMATCH mod_pk (%" PRId64 ",%" PRId64 ",%" PRId64 ") q=%" PRId64
                    "\n", a, b, c, q);
        ++mismatches;
        return;
    }
    std::printf("mod_pk  (%8" PRId64 ",%8" PRId64 ",%10" PRId64 ")  q %11" PRId64
                "  %-5s  serial %8.2f ms  omp %8.2f ms  x%.2f\n",
                a, b, c, q, serial ? "yes" : "no", ts, tp, tp > 0 ? ts / tp : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel variants fall back to serial\n\n");
#endif

    // unsolvable instances force full scans, solvable ones exercise early exit
    bench_witness(1, 1, -999983, {1000, 1000, 1});      // no solution: p = 3 (mod 4)
    bench_witness(1009, 1013, -1000003, {31766, 31766, 1011});
    bench_witness(1009, 1013, -1000033, {31766, 31766, 1011});
    bench_witness(1, 1, -2, {2, 2, 1});                 // immediate hit

    bench_mod_pk(5, 23, -1, 23, 23LL * 23 * 23);        // Hilbert symbol -1: full scan
    bench_mod_pk(5, 23, -1, 31, 31LL * 31 * 31);
    bench_mod_pk(2, 7, -1, 29, 29LL * 29 * 29);
    bench_mod_pk(1, 1, -1, 13, 13LL * 13 * 13);         // solvable: early exit

    if (mismatches) {
        std::printf("\n%d mismatch(es) between serial and parallel kernels\n",
                    mismatches);
        return 1;
    }
    std::printf("\nserial and parallel kernels agree on every instance\n");
    return 0;
}
