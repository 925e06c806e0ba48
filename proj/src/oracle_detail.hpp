#ifndef MFSPEC_SRC_ORACLE_DETAIL_HPP
#define MFSPEC_SRC_ORACLE_DETAIL_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mfspec/oracle.hpp"

namespace mfspec::detail {

inline double frequency_target(const MeasureParams& mp) {
    return 2.0 * mp.p() * mp.q() / (2.0 + mp.p() - mp.q());
}

// 5-sigma band for the pooled estimator plus an O(1/n) transient term.
inline double frequency_tolerance(std::size_t n, int n_paths) {
    return 5.0 / std::sqrt(static_cast<double>(n) * n_paths / 4.0) +
           10.0 / static_cast<double>(n);
}

// Pinned to 0.02 at n = 2^16 with 64 paths.
inline double local_dim_tolerance(std::size_t n, int n_paths) {
    return 0.02 * std::sqrt((65536.0 / static_cast<double>(n)) * (64.0 / n_paths));
}

inline double path_multiple_average(const MeasureParams& mp, std::size_t n,
                                    SamplerSeed seed) {
    const BinaryWord w = sample_prefix(mp, n, seed);
    return empirical_multiple_average(w, n);
}

inline double path_dimension_ratio(const IfsParams& params,
                                   const MeasureParams& mp, std::size_t n,
                                   SamplerSeed seed) {
    const BinaryWord w = sample_prefix(mp, n, seed);
    const double h = -cylinder_log_measure(mp, w, n).as_double();
    const double l = -log_diameter(params, w, n);
    return h / l;
}

inline double mean_in_order(const std::vector<double>& vals) {
    double acc = 0.0;
    for (double v : vals) acc += v;
    return acc / static_cast<double>(vals.size());
}

inline std::string param_details(const MeasureParams& mp) {
    std::ostringstream os;
    os << "p=" << mp.p() << " q=" << mp.q();
    return os.str();
}

inline VerificationReport finish_report(std::string name, double target,
                                        double estimate, double tolerance,
                                        std::int64_t n_used, int seeds_used,
                                        std::string details) {
    VerificationReport r;
    r.name = std::move(name);
    r.target = target;
    r.estimate = estimate;
    r.tolerance = tolerance;
    r.n_used = n_used;
    r.seeds_used = seeds_used;
    r.passed = std::abs(estimate - target) <= tolerance;
    r.details = std::move(details);
    return r;
}

inline VerificationReport skipped_report(std::string name, std::string reason) {
    VerificationReport r;
    r.name = std::move(name);
    r.passed = true;
    r.skipped = true;
    r.details = std::move(reason);
    return r;
}

inline void check_mc_preconditions(std::size_t n, int n_paths) {
    if (n < 1024 || n % 2 != 0)
        throw OutOfRange("Monte Carlo depth must be even and at least 2^10");
    if (n_paths < 16) throw OutOfRange("Monte Carlo needs at least 16 paths");
}

inline void check_local_dim_preconditions(const MeasureParams& mp, std::size_t n,
                                          int n_paths) {
    if (!(mp.p() > 0.02 && mp.p() < 0.98 && mp.q() > 0.02 && mp.q() < 0.98))
        throw DegenerateParams("local dimension needs p, q inside (0.02, 0.98)");
    if (n < (std::size_t{1} << 14))
        throw OutOfRange("local dimension needs depth at least 2^14");
    if (n_paths < 16) throw OutOfRange("Monte Carlo needs at least 16 paths");
}

}  // namespace mfspec::detail

#endif
