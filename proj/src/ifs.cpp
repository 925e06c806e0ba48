#include "mfspec/ifs.hpp"

#include <cmath>

#include "rootfind.hpp"

namespace mfspec {

IfsParams::IfsParams(double lambda0, double lambda1)
    : lambda0_(lambda0), lambda1_(lambda1) {
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0))
        throw NonPositiveExponent("lambda0 must be a positive finite real");
    if (!(lambda1 > 0.0) || !std::isfinite(lambda1))
        throw NonPositiveExponent("lambda1 must be a positive finite real");
    ratio0_ = std::exp(-lambda0);
    ratio1_ = std::exp(-lambda1);
    if (ratio0_ + ratio1_ > 1.0 + kOpenSetSlack)
        throw OpenSetViolation("open set condition violated: e^-l0 + e^-l1 > 1");
}

IfsParams validate_params(double lambda0, double lambda1) {
    return IfsParams(lambda0, lambda1);
}

Interval project_word(const IfsParams& params, const BinaryWord& w) {
    // maintain the affine composition g(x) = scale*x + left
    double left = 0.0;
    double scale = 1.0;
    const double r0 = params.ratio0();
    const double r1 = params.ratio1();
    const double t1 = 1.0 - r1;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w[i] == 0) {
            scale *= r0;
        } else {
            left += scale * t1;
            scale *= r1;
        }
    }
    return {left, scale};
}

double log_diameter(const IfsParams& params, const BinaryWord& w, std::size_t n) {
    const double ones = static_cast<double>(count_ones(w, n));
    return -(params.lambda1() * ones +
             params.lambda0() * (static_cast<double>(n) - ones));
}

double log_diameter(const IfsParams& params, const BinaryWord& w) {
    return log_diameter(params, w, w.length());
}

std::size_t count_ones(const BinaryWord& w, std::size_t n) {
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += static_cast<std::size_t>(w[i]);
    return ones;
}

std::size_t count_pattern11(const BinaryWord& w, std::size_t n) {
    if (n % 2 != 0) throw OddPrefix("pattern counting needs an even prefix");
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    std::size_t hits = 0;
    for (std::size_t k = 1; 2 * k <= n; ++k)
        if (w.symbol(k) == 1 && w.symbol(2 * k) == 1) ++hits;
    return hits;
}

double attractor_dimension(const IfsParams& params) {
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    auto f = [&](double s) { return 1.0 - (std::exp(-s * l0) + std::exp(-s * l1)); };
    const double f1 = f(1.0);
    if (f1 <= 0.0) return 1.0;  // touching-interval case, s = 1 up to the slack
    auto r = detail::find_root_increasing(f, 1e-9, 1.0, f(1e-9), f1, 1e-14, 200);
    return r.x;
}

}  // namespace mfspec
