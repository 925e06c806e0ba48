#ifndef MFSPEC_SRC_ROOTFIND_HPP
#define MFSPEC_SRC_ROOTFIND_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace mfspec::detail {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Bracketed root of a strictly increasing function with f(lo) < 0 < f(hi);
// the endpoint values may be infinite. Secant proposals alternate with
// plain bisection so the bracket width halves at least every second
// evaluation. Succeeds once |f| drops to tol; a collapsed bracket
// without that is a failure the caller turns into NoConvergence.
template <class F>
RootResult find_root_increasing(F&& f, double lo, double hi, double f_lo,
                                double f_hi, double tol, int max_iter) {
    double a = lo, b = hi, fa = f_lo, fb = f_hi;
    double best_x = 0.5 * (a + b);
    double best_fx = std::numeric_limits<double>::infinity();

    for (int it = 1; it <= max_iter; ++it) {
        double x = 0.5 * (a + b);
        if (it % 2 == 0 && std::isfinite(fa) && std::isfinite(fb) && fb > fa) {
            const double s = a - fa * (b - a) / (fb - fa);
            const double guard = 0.01 * (b - a);
            if (s > a + guard && s < b - guard) x = s;
        }
        const double fx = f(x);
        if (std::abs(fx) < std::abs(best_fx)) {
            best_x = x;
            best_fx = fx;
        }
        if (std::abs(fx) <= tol) return {x, fx, it, true};
        if (fx < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() * scale) break;
    }
    return {best_x, best_fx, max_iter, std::abs(best_fx) <= tol};
}

}  // namespace mfspec::detail

#endif
