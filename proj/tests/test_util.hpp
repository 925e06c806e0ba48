#ifndef MFSPEC_TESTS_TEST_UTIL_HPP
#define MFSPEC_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace testutil {

inline bool close_abs(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Independent plain bisection on a strictly increasing function with a
// sign change on [lo, hi]; the test-side oracle for root-based values.
template <class F>
double bisect_increasing(F f, double lo, double hi, int iters = 200) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline const char* cli_path() { return std::getenv("MFSPEC_CLI"); }

// Runs the CLI binary named by MFSPEC_CLI with stderr dropped and
// stdout captured.
inline CliResult run_cli(const std::string& args) {
    CliResult result;
    const char* exe = cli_path();
    if (exe == nullptr) return result;
    const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace testutil

#endif
