#include "mfspec/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rootfind.hpp"

namespace mfspec {

namespace {

constexpr double kEqualExponentRelGap = 1e-9;
constexpr double kBracketEps = 1e-13;

void require_interior(double p, double q) {
    if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0))
        throw BoundaryParams("p and q must lie strictly inside (0, 1)");
}

bool exponents_equal(const IfsParams& params) {
    return std::abs(params.lambda0() - params.lambda1()) <=
           kEqualExponentRelGap * std::max(params.lambda0(), params.lambda1());
}

// Coefficients of the critical equation as a combination of the four
// basic logs: A log p + B log(1-p) + C log q + D log(1-q), with
// A = a(l1-l0)+2l0, B = -a(l1-l0)-l0-2l1, C = -a(l1-l0), D = a(l1-l0)+l0.
// A, D > 0 and B < 0, so the expression diverges cleanly (no NaN) when
// p or q approaches a boundary on the constraint curve.
struct CriticalCoeffs {
    double log_p, log_1p, log_q, log_1q;
};

CriticalCoeffs critical_coeffs(const IfsParams& params, double alpha) {
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    const double d = alpha * (l1 - l0);
    return {d + 2.0 * l0, -d - l0 - 2.0 * l1, -d, d + l0};
}

double critical_unchecked(const IfsParams& params, double alpha, double p,
                          double q) {
    const CriticalCoeffs c = critical_coeffs(params, alpha);
    double acc = c.log_p * std::log(p) + c.log_1p * std::log(1.0 - p) +
                 c.log_1q * std::log(1.0 - q);
    if (c.log_q != 0.0) acc += c.log_q * std::log(q);
    return acc;
}

// One evaluation of the critical equation on the curve, carrying the
// four logs so the dimension can be formed without re-deriving 1-p or
// 1-q from rounded endpoints.
struct CurveEval {
    double f = 0.0;
    double p = 0.0, q = 0.0;
    double log_p = 0.0, log_1p = 0.0, log_q = 0.0, log_1q = 0.0;
};

// Parametrized by p; accurate while the root keeps q away from 1
// (alpha <= 1/2). 1-q is computed in its algebraic form to avoid the
// cancellation in 1 - alpha(2+p)/(2p+alpha).
CurveEval eval_curve_by_p(const IfsParams& params, double alpha, double p) {
    const CriticalCoeffs c = critical_coeffs(params, alpha);
    CurveEval e;
    e.p = p;
    const double denom = 2.0 * p + alpha;
    const double one_minus_q = (p * (2.0 - alpha) - alpha) / denom;
    if (!(one_minus_q > 0.0)) {
        e.f = -std::numeric_limits<double>::infinity();  // at or past q = 1
        return e;
    }
    e.q = alpha * (2.0 + p) / denom;
    e.log_p = std::log(p);
    e.log_1p = std::log1p(-p);
    e.log_q = std::log1p(-one_minus_q);
    e.log_1q = std::log(one_minus_q);
    e.f = c.log_p * e.log_p + c.log_1p * e.log_1p + c.log_q * e.log_q +
          c.log_1q * e.log_1q;
    return e;
}

// Parametrized by s = log(1-q); accurate while the root keeps p away
// from p_min, which is the alpha -> 1 regime where 1-q vanishes like
// (1-p)^3 and p itself is useless as a bisection variable.
CurveEval eval_curve_by_s(const IfsParams& params, double alpha, double s) {
    const CriticalCoeffs c = critical_coeffs(params, alpha);
    CurveEval e;
    const double u = std::exp(s);  // 1 - q
    const double denom = 2.0 - alpha - 2.0 * u;
    const double v_num = 2.0 * (1.0 - alpha) - (2.0 + alpha) * u;  // (1-p)*denom
    if (!(v_num > 0.0) || !(denom > 0.0)) {
        e.f = std::numeric_limits<double>::infinity();  // at or past p = 1
        return e;
    }
    const double v = v_num / denom;
    e.p = alpha * (1.0 + u) / denom;
    e.q = 1.0 - u;
    e.log_p = std::log1p(-v);
    e.log_1p = std::log(v);
    e.log_q = std::log1p(-u);
    e.log_1q = s;
    e.f = c.log_p * e.log_p + c.log_1p * e.log_1p + c.log_q * e.log_q +
          c.log_1q * e.log_1q;
    return e;
}

// dim formula involving only lambda0, evaluated from the carried logs.
double dimension_from_logs(const IfsParams& params, double alpha,
                           const CurveEval& e) {
    const double ratio_log = e.log_p + e.log_1q - e.log_1p - e.log_q;
    return (alpha * ratio_log - 2.0 * e.log_1p) / (2.0 * params.lambda0());
}

}  // namespace

void SolverConfig::validate() const {
    if (!(tolerance >= 1e-15) || !std::isfinite(tolerance))
        throw OutOfRange("solver tolerance must be at least 1e-15");
    if (max_iterations < 10) throw OutOfRange("solver needs at least 10 iterations");
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("entropy argument outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double measure_dimension(const IfsParams& params, const MeasureParams& mp) {
    const double p = mp.p();
    const double q = mp.q();
    const double denom =
        2.0 * p * params.lambda1() + (2.0 - p - q) * params.lambda0();
    if (!(denom > 0.0))
        throw DegenerateDenominator("Lyapunov denominator must be positive");
    return ((2.0 - q) * binary_entropy(p) + p * binary_entropy(q)) / denom;
}

double curve_p_min(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw OutOfRange("alpha outside [0, 1]");
    return alpha / (2.0 - alpha);
}

double curve_q(double alpha, double p) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw OutOfRange("alpha outside [0, 1]");
    const double denom = 2.0 * p + alpha;
    if (!(denom > 0.0))
        throw OutOfCurveDomain("curve undefined at p = alpha = 0");
    const double q = alpha * (2.0 + p) / denom;
    if (q > 1.0 + 1e-12)
        throw OutOfCurveDomain("p below the admissible range for this alpha");
    return std::min(q, 1.0);
}

double critical_equation(const IfsParams& params, double alpha, double p,
                         double q) {
    require_interior(p, q);
    return critical_unchecked(params, alpha, p, q);
}

double critical_equation_raw(const IfsParams& params, double p, double q) {
    require_interior(p, q);
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    const double pq = p * q;
    const double coeff_p = 2.0 * pq * l1 + (4.0 + 2.0 * p - 2.0 * q - 2.0 * pq) * l0;
    const double coeff_1p =
        (-4.0 - 2.0 * p + 2.0 * q - 2.0 * pq) * l1 + (-2.0 - p + q + 2.0 * pq) * l0;
    const double coeff_q = -2.0 * pq * l1 + 2.0 * pq * l0;
    const double coeff_1q = 2.0 * pq * l1 + (2.0 + p - q - 2.0 * pq) * l0;
    return coeff_p * std::log(p) + coeff_1p * std::log(1.0 - p) +
           coeff_q * std::log(q) + coeff_1q * std::log(1.0 - q);
}

double critical_equation_beta(const IfsParams& params, double beta, double p,
                              double q) {
    require_interior(p, q);
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    const double coeff_p = 2.0 * l1 + (2.0 * beta - 2.0) * l0;
    const double coeff_1p = (-2.0 * beta - 2.0) * l1 + (2.0 - beta) * l0;
    const double coeff_q = -2.0 * l1 + 2.0 * l0;
    const double coeff_1q = 2.0 * l1 + (beta - 2.0) * l0;
    return coeff_p * std::log(p) + coeff_1p * std::log(1.0 - p) +
           coeff_q * std::log(q) + coeff_1q * std::log(1.0 - q);
}

std::pair<double, double> critical_coefficients(double alpha, double p, double q) {
    require_interior(p, q);
    const double lp = std::log(p);
    const double l1p = std::log(1.0 - p);
    const double lq = std::log(q);
    const double l1q = std::log(1.0 - q);
    const double a1 = alpha * lp + (-2.0 - alpha) * l1p - alpha * lq + alpha * l1q;
    const double a2 =
        (2.0 - alpha) * lp + (alpha - 1.0) * l1p + alpha * lq + (1.0 - alpha) * l1q;
    return {a1, a2};
}

double solve_golden_p(const IfsParams& params, const SolverConfig& cfg) {
    cfg.validate();
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    auto f = [&](double p) {
        return 2.0 * l0 * std::log(p) - (2.0 * l1 + l0) * std::log(1.0 - p);
    };
    const double lo = 1e-12;
    const double hi = 1.0 - 1e-12;
    auto r = detail::find_root_increasing(f, lo, hi, f(lo), f(hi), cfg.tolerance,
                                          cfg.max_iterations);
    if (!r.converged)
        throw NoConvergence("golden equation residual did not reach tolerance");
    return r.x;
}

double golden_dimension(const IfsParams& params, const SolverConfig& cfg) {
    return -std::log1p(-solve_golden_p(params, cfg)) / params.lambda0();
}

double dim_from_lambda0(const IfsParams& params, double alpha, double p, double q) {
    require_interior(p, q);
    const double ratio_log = std::log(p) + std::log(1.0 - q) - std::log(1.0 - p) -
                             std::log(q);
    return (alpha * ratio_log - 2.0 * std::log(1.0 - p)) / (2.0 * params.lambda0());
}

double dim_from_lambda1(const IfsParams& params, double alpha, double p, double q) {
    require_interior(p, q);
    const double ratio_log = std::log(p) + std::log(1.0 - q) - std::log(1.0 - p) -
                             std::log(q);
    const double mass_log =
        2.0 * std::log(p) + std::log(1.0 - q) - std::log(1.0 - p);
    return (alpha * ratio_log - mass_log) / (2.0 * params.lambda1());
}

double dim_from_lambda_diff(const IfsParams& params, double p, double q) {
    if (exponents_equal(params))
        throw EqualExponents("formula undefined for lambda0 = lambda1");
    require_interior(p, q);
    const double num =
        2.0 * std::log(p) + std::log(1.0 - q) - 3.0 * std::log(1.0 - p);
    return num / (2.0 * (params.lambda0() - params.lambda1()));
}

double DimensionFormulas::spread() const {
    std::array<std::optional<double>, 4> all{from_lambda0, from_lambda1,
                                             from_lambda_diff, functional};
    double worst = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] && all[j])
                worst = std::max(worst, std::abs(*all[i] - *all[j]));
    return worst;
}

DimensionFormulas dimension_formulas_at(const IfsParams& params,
                                        const SpectrumPoint& point) {
    DimensionFormulas out;
    const double p = point.p;
    const double q = point.q;
    const bool distinct = !exponents_equal(params);

    if (point.alpha == 1.0 || p >= 1.0 || q >= 1.0) {
        // degenerate corner (or q rounded to 1 at extreme levels):
        // only the entropy-to-Lyapunov ratio stays well defined
        out.functional = measure_dimension(params, MeasureParams(p, q));
        return out;
    }
    out.functional = measure_dimension(params, MeasureParams(p, q));
    if (q == 0.0) {
        // q -> 0 limits: the alpha-weighted ratio term drops out.
        out.from_lambda0 = -std::log1p(-p) / params.lambda0();
        out.from_lambda1 =
            (std::log1p(-p) - 2.0 * std::log(p)) / (2.0 * params.lambda1());
        if (distinct)
            out.from_lambda_diff = (2.0 * std::log(p) - 3.0 * std::log1p(-p)) /
                                   (2.0 * (params.lambda0() - params.lambda1()));
        return out;
    }
    out.from_lambda0 = dim_from_lambda0(params, point.alpha, p, q);
    out.from_lambda1 = dim_from_lambda1(params, point.alpha, p, q);
    if (distinct) out.from_lambda_diff = dim_from_lambda_diff(params, p, q);
    return out;
}

SpectrumPoint solve_alpha(const IfsParams& params, double alpha,
                          const SolverConfig& cfg) {
    cfg.validate();
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw OutOfRange("alpha outside [0, 1]");

    if (alpha == 0.0) {
        const double p = solve_golden_p(params, cfg);
        const double l0 = params.lambda0();
        const double l1 = params.lambda1();
        SpectrumPoint pt;
        pt.alpha = 0.0;
        pt.p = p;
        pt.q = 0.0;
        pt.dimension = -std::log1p(-p) / l0;
        pt.residual_f =
            std::abs(2.0 * l0 * std::log(p) - (2.0 * l1 + l0) * std::log1p(-p));
        pt.formula_spread = dimension_formulas_at(params, pt).spread();
        return pt;
    }
    if (alpha == 1.0) {
        // gamma_1 collapses to the single point (1, 1) with dimension 0
        return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
    }

    // Bisect in p while the root stays clear of q = 1; for alpha above
    // 1/2 switch to s = log(1-q), where the equation stays well
    // conditioned all the way to the degenerate corner.
    CurveEval root_eval;
    bool converged = false;
    if (alpha <= 0.5) {
        const double p_lo = curve_p_min(alpha);
        auto phi = [&](double p) { return eval_curve_by_p(params, alpha, p).f; };
        double a = p_lo + kBracketEps;
        double b = 1.0 - kBracketEps;
        double fa = phi(a);
        double fb = phi(b);
        for (int t = 0; t < 20 && !(fa < 0.0); ++t) {
            a = p_lo + (a - p_lo) * 0.125;
            fa = phi(a);
        }
        for (int t = 0; t < 20 && !(fb > 0.0); ++t) {
            b = 1.0 - (1.0 - b) * 0.125;
            fb = phi(b);
        }
        if (!(fa < 0.0 && fb > 0.0))
            throw NoConvergence("failed to bracket the critical point on the curve");
        auto root = detail::find_root_increasing(phi, a, b, fa, fb, cfg.tolerance,
                                                 cfg.max_iterations);
        converged = root.converged;
        root_eval = eval_curve_by_p(params, alpha, root.x);
    } else {
        const double u_max = 2.0 * (1.0 - alpha) / (2.0 + alpha);  // 1-q at p = 1
        auto phi = [&](double s) { return eval_curve_by_s(params, alpha, s).f; };
        double a = std::log(u_max) - 700.0;
        double b = std::log(u_max) + std::log1p(-kBracketEps);
        double fa = phi(a);
        double fb = phi(b);
        for (int t = 0; t < 20 && !(fa < 0.0); ++t) {
            a -= 35.0;
            fa = phi(a);
        }
        double eps = kBracketEps;
        for (int t = 0; t < 20 && !(fb > 0.0); ++t) {
            eps *= 0.125;
            b = std::log(u_max) + std::log1p(-eps);
            fb = phi(b);
        }
        if (!(fa < 0.0 && fb > 0.0))
            throw NoConvergence("failed to bracket the critical point on the curve");
        auto root = detail::find_root_increasing(phi, a, b, fa, fb, cfg.tolerance,
                                                 cfg.max_iterations);
        converged = root.converged;
        root_eval = eval_curve_by_s(params, alpha, root.x);
    }
    if (!converged)
        throw NoConvergence("critical equation residual did not reach tolerance");

    SpectrumPoint pt;
    pt.alpha = alpha;
    pt.p = root_eval.p;
    pt.q = std::clamp(root_eval.q, 0.0, 1.0);
    pt.dimension = dimension_from_logs(params, alpha, root_eval);
    pt.residual_f = std::abs(root_eval.f);
    pt.formula_spread = dimension_formulas_at(params, pt).spread();
    return pt;
}

std::vector<SweepEntry> spectrum_sweep(const IfsParams& params,
                                       std::span<const double> alphas,
                                       const SolverConfig& cfg) {
    std::vector<SweepEntry> out(alphas.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(alphas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[i].alpha = alphas[i];
        try {
            out[i].point = solve_alpha(params, alphas[i], cfg);
        } catch (const std::exception& e) {
            out[i].error = e.what();
        }
    }
    return out;
}

namespace serial {
std::vector<SweepEntry> spectrum_sweep(const IfsParams& params,
                                       std::span<const double> alphas,
                                       const SolverConfig& cfg) {
    std::vector<SweepEntry> out(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        out[i].alpha = alphas[i];
        try {
            out[i].point = solve_alpha(params, alphas[i], cfg);
        } catch (const std::exception& e) {
            out[i].error = e.what();
        }
    }
    return out;
}
}  // namespace serial

bool solvable_region_check(double alpha, double p, double q) {
    require_interior(p, q);
    const double curve_residual = 2.0 * p * q - alpha * (2.0 + p - q);
    if (std::abs(curve_residual) > 1e-8)
        throw NotOnCurve("(p, q) does not satisfy the alpha constraint");
    auto [a1, a2] = critical_coefficients(alpha, p, q);
    return a1 > 0.0 && a2 < 0.0;
}

double bernoulli_alpha(const IfsParams& params, const SolverConfig& cfg) {
    cfg.validate();
    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    auto f = [&](double p) { return l0 * std::log(p) - l1 * std::log(1.0 - p); };
    const double lo = 1e-12;
    const double hi = 1.0 - 1e-12;
    auto r = detail::find_root_increasing(f, lo, hi, f(lo), f(hi), cfg.tolerance,
                                          cfg.max_iterations);
    if (!r.converged)
        throw NoConvergence("Bernoulli balance residual did not reach tolerance");
    return r.x * r.x;
}

}  // namespace mfspec
