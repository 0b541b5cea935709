// Times the OpenMP kernels against their serial reference twins and reports
// the speedup plus the largest entrywise disagreement.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinchain/kernels.hpp"
#include "spinchain/matrix.hpp"

using namespace spinchain;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_ms(F&& f, int repeat) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const auto t0 = clock_type::now();
        f();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* kernel, std::size_t size, double serial_ms, double parallel_ms,
            double max_diff) {
    std::printf("%-12s %8zu %12.2f %12.2f %9.2fx %12.3e\n", kernel, size, serial_ms,
                parallel_ms, serial_ms / parallel_ms, max_diff);
}

Matrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = 512;
    std::size_t modes = 1024;
    std::size_t samples = 40000;
    int repeat = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const long value = std::strtol(argv[i + 1], nullptr, 10);
        if (flag == "--n")
            n = static_cast<std::size_t>(value);
        else if (flag == "--modes")
            modes = static_cast<std::size_t>(value);
        else if (flag == "--samples")
            samples = static_cast<std::size_t>(value);
        else if (flag == "--repeat")
            repeat = static_cast<int>(value);
        else {
            std::fprintf(stderr, "usage: %s [--n N] [--modes M] [--samples S] [--repeat R]\n",
                         argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-12s %8s %12s %12s %9s %12s\n", "kernel", "size", "serial_ms",
                "parallel_ms", "speedup", "max_diff");

    std::mt19937 rng(20240817);

    {
        const Matrix a = random_matrix(n, rng);
        const Matrix b = random_matrix(n, rng);
        Matrix ref, par;
        const double serial_ms = best_ms([&] { ref = kernels::serial::matmul(a, b); }, repeat);
        const double parallel_ms = best_ms([&] { par = kernels::matmul(a, b); }, repeat);
        report("matmul", n, serial_ms, parallel_ms, max_abs_diff(ref, par));
    }

    {
        // orthonormal columns are unnecessary for timing; random works
        const Matrix vecs = random_matrix(n, rng);
        std::vector<double> vals(n);
        std::uniform_real_distribution<double> dist(-4.0, 4.0);
        for (double& v : vals) v = dist(rng);
        CMatrix ref, par;
        const double serial_ms =
            best_ms([&] { ref = kernels::serial::assemble_propagator(vecs, vals, 1.25); },
                    repeat);
        const double parallel_ms =
            best_ms([&] { par = kernels::assemble_propagator(vecs, vals, 1.25); }, repeat);
        report("propagator", n, serial_ms, parallel_ms, max_abs_diff(ref, par));
    }

    {
        std::uniform_real_distribution<double> dist(-4.0, 4.0);
        std::vector<double> vals(modes), weights(modes), times(samples);
        for (double& v : vals) v = dist(rng);
        for (double& w : weights) w = dist(rng);
        for (std::size_t s = 0; s < samples; ++s)
            times[s] = 50.0 * static_cast<double>(s) / static_cast<double>(samples - 1);
        std::vector<complex> ref, par;
        const double serial_ms =
            best_ms([&] { ref = kernels::serial::phase_sum_scan(vals, weights, times); },
                    repeat);
        const double parallel_ms =
            best_ms([&] { par = kernels::phase_sum_scan(vals, weights, times); }, repeat);
        double diff = 0.0;
        for (std::size_t s = 0; s < samples; ++s)
            diff = std::max(diff, std::abs(ref[s] - par[s]));
        report("phase_scan", samples, serial_ms, parallel_ms, diff);
    }

    return 0;
}
