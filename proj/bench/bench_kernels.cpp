// Compares the OpenMP kernels against their serial reference
// implementations and reports speedups. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mfspec/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const mfspec::IfsParams params(0.6931471805599453, 1.3862943611198906);
    const mfspec::MeasureParams mp(0.6, 0.3);
    const mfspec::SamplerSeed seed{42, 0};

    {
        const double s = time_ms([&] { (void)mfspec::serial::enumerate_check(mp, 18); });
        const double p = time_ms([&] { (void)mfspec::enumerate_check(mp, 18); });
        row("enumerate_check(18)", s, p);
    }
    {
        const std::size_t grid = 4000000;
        const double s =
            time_ms([&] { (void)mfspec::serial::grid_maximize_D(params, 0.5, grid); });
        const double p =
            time_ms([&] { (void)mfspec::grid_maximize_D(params, 0.5, grid); });
        row("grid_maximize_D(4e6)", s, p);
    }
    {
        const std::size_t n = std::size_t{1} << 18;
        const double s = time_ms(
            [&] { (void)mfspec::serial::mc_frequency_check(mp, n, 64, seed); });
        const double p =
            time_ms([&] { (void)mfspec::mc_frequency_check(mp, n, 64, seed); });
        row("mc_frequency(2^18,64)", s, p);
    }
    {
        const std::size_t n = std::size_t{1} << 16;
        const double s = time_ms(
            [&] { (void)mfspec::serial::mc_local_dimension(params, mp, n, 64, seed); });
        const double p = time_ms(
            [&] { (void)mfspec::mc_local_dimension(params, mp, n, 64, seed); });
        row("mc_local_dim(2^16,64)", s, p);
    }
    {
        std::vector<double> alphas;
        for (int i = 0; i <= 100; ++i) alphas.push_back(i / 100.0);
        const double s =
            time_ms([&] { (void)mfspec::serial::spectrum_sweep(params, alphas); });
        const double p = time_ms([&] { (void)mfspec::spectrum_sweep(params, alphas); });
        row("spectrum_sweep(101)", s, p);
    }
    return 0;
}
