// Straightforward single-thread reference implementations of the
// parallel oracle kernels. Tests pin the parallel results against
// these; the benchmark target compares their runtimes.

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mfspec/oracle.hpp"
#include "oracle_detail.hpp"

namespace mfspec::serial {

VerificationReport mc_frequency_check(const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base) {
    detail::check_mc_preconditions(n, n_paths);
    std::vector<double> vals(static_cast<std::size_t>(n_paths));
    for (int i = 0; i < n_paths; ++i)
        vals[static_cast<std::size_t>(i)] = detail::path_multiple_average(
            mp, n, {base.seed, base.stream + static_cast<std::uint64_t>(i)});
    return detail::finish_report("mc_frequency", detail::frequency_target(mp),
                                 detail::mean_in_order(vals),
                                 detail::frequency_tolerance(n, n_paths),
                                 static_cast<std::int64_t>(n), n_paths,
                                 detail::param_details(mp));
}

VerificationReport mc_local_dimension(const IfsParams& params,
                                      const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base) {
    detail::check_local_dim_preconditions(mp, n, n_paths);
    std::vector<double> vals(static_cast<std::size_t>(n_paths));
    for (int i = 0; i < n_paths; ++i)
        vals[static_cast<std::size_t>(i)] = detail::path_dimension_ratio(
            params, mp, n, {base.seed, base.stream + static_cast<std::uint64_t>(i)});
    return detail::finish_report("mc_local_dimension", measure_dimension(params, mp),
                                 detail::mean_in_order(vals),
                                 detail::local_dim_tolerance(n, n_paths),
                                 static_cast<std::int64_t>(n), n_paths,
                                 detail::param_details(mp));
}

VerificationReport enumerate_check(const MeasureParams& mp, int n_max) {
    if (n_max < 1 || n_max > 20)
        throw OutOfRange("exhaustive enumeration supports n_max in [1, 20]");

    double max_dev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t total = std::uint64_t{1} << n;
        double sum = 0.0;
        for (std::uint64_t code = 0; code < total; ++code)
            sum += std::exp(cylinder_log_measure_code(mp, code, n).as_double());
        max_dev = std::max(max_dev, std::abs(sum - 1.0));

        const std::uint64_t parents = std::uint64_t{1} << (n - 1);
        const std::uint64_t child_bit = std::uint64_t{1} << (n - 1);
        for (std::uint64_t code = 0; code < parents; ++code) {
            const double m =
                std::exp(cylinder_log_measure_code(mp, code, n - 1).as_double());
            const double m0 =
                std::exp(cylinder_log_measure_code(mp, code, n).as_double());
            const double m1 = std::exp(
                cylinder_log_measure_code(mp, code | child_bit, n).as_double());
            max_dev = std::max(max_dev, std::abs(m - (m0 + m1)));
        }
    }

    std::ostringstream details;
    details << detail::param_details(mp) << " n_max=" << n_max;
    return detail::finish_report("enumerate_measure", 0.0, max_dev, 1e-10, n_max, 0,
                                 details.str());
}

GridMaxResult grid_maximize_D(const IfsParams& params, double alpha,
                              std::size_t grid_size) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw OutOfRange("grid maximization needs alpha inside (0, 1)");
    if (grid_size < 1000) throw OutOfRange("grid needs at least 1e3 points");

    const double l0 = params.lambda0();
    const double l1 = params.lambda1();
    const double p_min = curve_p_min(alpha);
    const double span = 1.0 - p_min;
    auto dim_at = [&](double p, double q) {
        return ((2.0 - q) * binary_entropy(p) + p * binary_entropy(q)) /
               (2.0 * p * l1 + (2.0 - p - q) * l0);
    };
    auto p_at = [&](std::size_t i) {
        return p_min + span * static_cast<double>(i + 1) /
                           static_cast<double>(grid_size + 1);
    };

    double best_d = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double p = p_at(i);
        const double d = dim_at(p, curve_q(alpha, p));
        if (d > best_d) {
            best_d = d;
            best_i = i;
        }
    }
    const double p = p_at(best_i);
    const double q = curve_q(alpha, p);
    return {p, q, dim_at(p, q)};
}

}  // namespace mfspec::serial
