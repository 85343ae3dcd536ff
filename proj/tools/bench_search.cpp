// Throughput comparison of the serial reference kernel against the OpenMP
// kernel on representative search workloads.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "sdr/parse.hpp"
#include "sdr/search.hpp"

using namespace sdr;

namespace {

double run_serial(const TernaryPoly& F, unsigned n) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOptions opt;
    opt.classify = false;
    auto rep = enumerate_representations_serial(F, n, opt);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("  serial:   %10.1f ms  (%llu pencils, %zu found)\n", ms,
                (unsigned long long)rep.total, rep.found.size());
    return ms;
}

double run_parallel(const TernaryPoly& F, unsigned n, int workers) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOptions opt;
    opt.classify = false;
    opt.workers = workers;
    auto rep = enumerate_representations(F, n, opt);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("  omp(%2d):  %10.1f ms  (%llu pencils, %zu found)\n", workers ? workers
                                                                               : omp_get_max_threads(),
                ms, (unsigned long long)rep.total, rep.found.size());
    return ms;
}

void bench(const char* label, const char* field, const char* poly, unsigned n) {
    std::printf("%s\n", label);
    TernaryPoly F = parse_poly(poly, FieldContext::parse(field));
    double s = run_serial(F, n);
    double p = run_parallel(F, n, 0);
    std::printf("  speedup:  %.2fx\n", s / p);
}

}  // namespace

int main() {
    std::printf("search kernel benchmark (max threads: %d)\n\n", omp_get_max_threads());
    bench("cubic over F2, n = 3 (2^18 candidates)", "F2", "X0^3+X1^3+X2^3", 3);
    bench("conic over F5, n = 2 (5^9 candidates)", "F5", "X0^2+X1^2+X2^2", 2);
    bench("conic over F7, n = 2 (7^9 candidates)", "F7", "X0^2+X1^2-X2^2", 2);
    return 0;
}
