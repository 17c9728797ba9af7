// Compares the serial and OpenMP sweep drivers on the same workload and
// checks that their counters agree.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ec/sweeps.hpp"

using namespace ec;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int run(const char* name, SweepOutcome (*sweep)(u64, bool), const std::vector<u64>& primes) {
    SweepOutcome serial, parallel;
    double ts = time_ms([&] {
        for (u64 p : primes) serial.merge(sweep(p, false));
    });
    double tp = time_ms([&] {
        for (u64 p : primes) parallel.merge(sweep(p, true));
    });
    bool agree = serial.curves_scanned == parallel.curves_scanned &&
                 serial.checks == parallel.checks && serial.violations == parallel.violations;
    std::printf("%-10s serial %8.1f ms   parallel %8.1f ms   speedup %4.2fx   %s\n", name, ts,
                tp, ts / tp, agree ? "counters agree" : "COUNTER MISMATCH");
    std::printf("           scanned %llu, checks %llu, violations %llu\n",
                (unsigned long long)serial.curves_scanned, (unsigned long long)serial.checks,
                (unsigned long long)serial.violations);
    return agree && serial.violations == 0 ? 0 : 1;
}

} // namespace

int main() {
    int rc = 0;
    rc |= run("prop2", sweep_prop2, {13, 17, 29});
    rc |= run("splitting", sweep_splitting, {13, 17, 19, 23});
    rc |= run("thm11", sweep_thm11, {101, 103, 107, 109, 113});
    return rc;
}
