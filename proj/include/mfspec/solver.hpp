#ifndef MFSPEC_SOLVER_HPP
#define MFSPEC_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfspec/ifs.hpp"
#include "mfspec/measure.hpp"

namespace mfspec {

struct SolverConfig {
    double tolerance = 1e-12;   // residual target for root finding
    int max_iterations = 200;

    void validate() const;  // throws OutOfRange outside the supported range
};

/// One solved spectrum entry: the level alpha, the optimal measure
/// parameters on the constraint curve, the dimension, and diagnostics.
struct SpectrumPoint {
    double alpha = 0.0;
    double p = 0.0;
    double q = 0.0;
    double dimension = 0.0;
    double residual_f = 0.0;       // critical equation value at the root
    double formula_spread = 0.0;   // max pairwise gap among the dimension formulas
};

/// H(p) = -p log p - (1-p) log(1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

/// Entropy-to-Lyapunov ratio giving the Hausdorff dimension of the
/// projected measure nu_{p,q}:
///   D(p,q) = ((2-q) H(p) + p H(q)) / (2 p lambda1 + (2-p-q) lambda0).
double measure_dimension(const IfsParams& params, const MeasureParams& mp);

/// Smallest p admissible on the constraint curve for a given alpha
/// (the p at which the curve hits q = 1): alpha / (2 - alpha).
double curve_p_min(double alpha);

/// q solving 2pq = alpha (2 + p - q), i.e. q = alpha (2+p) / (2p + alpha).
/// Throws OutOfCurveDomain when the curve would need q > 1.
double curve_q(double alpha, double p);

/// Left-hand side of the critical-point equation whose unique zero on
/// the constraint curve maximizes D:
///   alpha (l1 - l0) log(p(1-q)/((1-p)q))
///   + l0 log(p^2 (1-q)/(1-p)) - 2 l1 log(1-p).
/// Strictly increasing along the curve; +inf at p -> 1, -inf at q -> 1.
double critical_equation(const IfsParams& params, double alpha, double p, double q);

/// The same stationarity condition before the curve substitution: the
/// four-term log combination whose coefficients are polynomials in
/// (p, q, lambda0, lambda1). Equals p*q times the beta form on the curve.
double critical_equation_raw(const IfsParams& params, double p, double q);

/// Stationarity condition written with beta = 2/alpha; on the curve,
/// critical_equation = (alpha/2) * this.
double critical_equation_beta(const IfsParams& params, double beta, double p,
                              double q);

/// Coefficient pair (a1, a2) with lambda1*a1 + lambda0*a2 equal to the
/// critical equation; a solvable pair needs a1 > 0 > a2.
std::pair<double, double> critical_coefficients(double alpha, double p, double q);

/// Unique p in (0,1) with p^{2 l0} = (1-p)^{2 l1 + l0} (the alpha = 0,
/// pattern-forbidden optimum).
double solve_golden_p(const IfsParams& params, const SolverConfig& cfg = {});

/// -log(1 - solve_golden_p) / lambda0.
double golden_dimension(const IfsParams& params, const SolverConfig& cfg = {});

/// Dimension formulas valid at solutions of the critical equation.
/// The first involves only lambda0 and is the reported value; the
/// other two are cross-check diagnostics.
double dim_from_lambda0(const IfsParams& params, double alpha, double p, double q);
double dim_from_lambda1(const IfsParams& params, double alpha, double p, double q);
/// Requires lambda0 != lambda1 (relative gap > 1e-9).
double dim_from_lambda_diff(const IfsParams& params, double p, double q);

/// Solve one level: alpha = 0 and alpha = 1 dispatch to the degenerate
/// closed forms, interior alpha bisects the critical equation along the
/// constraint curve.
SpectrumPoint solve_alpha(const IfsParams& params, double alpha,
                          const SolverConfig& cfg = {});

/// All dimension formulas evaluated at one solved point, including the
/// q -> 0 limits used at alpha = 0. Entries that are undefined in the
/// given regime (equal exponents, the alpha = 1 corner) stay empty.
struct DimensionFormulas {
    std::optional<double> from_lambda0;
    std::optional<double> from_lambda1;
    std::optional<double> from_lambda_diff;
    std::optional<double> functional;

    /// Max pairwise gap among the defined entries.
    double spread() const;
};

DimensionFormulas dimension_formulas_at(const IfsParams& params,
                                        const SpectrumPoint& point);

struct SweepEntry {
    double alpha = 0.0;
    std::optional<SpectrumPoint> point;
    std::string error;  // non-empty when the per-point solve failed
};

/// Independent solves over an alpha grid; output order follows input.
/// Evaluated in parallel; per-point failures are collected, not fatal.
std::vector<SweepEntry> spectrum_sweep(const IfsParams& params,
                                       std::span<const double> alphas,
                                       const SolverConfig& cfg = {});

/// True iff (p, q) on the curve can be the optimum for SOME exponent
/// pair: alpha log(p(1-q)/((1-p)q)) > max(2 log(1-p), log(p^2(1-q)/(1-p))).
bool solvable_region_check(double alpha, double p, double q);

/// The level alpha = p*^2 whose optimum is the Bernoulli measure on the
/// diagonal, where lambda0 log p* = lambda1 log(1-p*); at that level the
/// spectrum touches the attractor dimension.
double bernoulli_alpha(const IfsParams& params, const SolverConfig& cfg = {});

namespace serial {
/// Plain-loop reference of spectrum_sweep, kept for testing the
/// parallel kernel; results must match it exactly.
std::vector<SweepEntry> spectrum_sweep(const IfsParams& params,
                                       std::span<const double> alphas,
                                       const SolverConfig& cfg = {});
}  // namespace serial

}  // namespace mfspec

#endif
