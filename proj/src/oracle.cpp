#include "mfspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracle_detail.hpp"

namespace mfspec {

using detail::check_local_dim_preconditions;
using detail::check_mc_preconditions;
using detail::finish_report;
using detail::skipped_report;

VerificationReport mc_frequency_check(const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base) {
    check_mc_preconditions(n, n_paths);
    std::vector<double> vals(static_cast<std::size_t>(n_paths));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_paths; ++i)
        vals[static_cast<std::size_t>(i)] = detail::path_multiple_average(
            mp, n, {base.seed, base.stream + static_cast<std::uint64_t>(i)});
    return finish_report("mc_frequency", detail::frequency_target(mp),
                         detail::mean_in_order(vals),
                         detail::frequency_tolerance(n, n_paths),
                         static_cast<std::int64_t>(n), n_paths,
                         detail::param_details(mp));
}

VerificationReport mc_local_dimension(const IfsParams& params,
                                      const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base) {
    check_local_dim_preconditions(mp, n, n_paths);
    std::vector<double> vals(static_cast<std::size_t>(n_paths));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_paths; ++i)
        vals[static_cast<std::size_t>(i)] = detail::path_dimension_ratio(
            params, mp, n, {base.seed, base.stream + static_cast<std::uint64_t>(i)});
    return finish_report("mc_local_dimension", measure_dimension(params, mp),
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
        const int chunks = static_cast<int>(std::min<std::uint64_t>(total, 256));

        std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
        for (int c = 0; c < chunks; ++c) {
            const std::uint64_t begin = total * static_cast<std::uint64_t>(c) /
                                        static_cast<std::uint64_t>(chunks);
            const std::uint64_t end = total * (static_cast<std::uint64_t>(c) + 1) /
                                      static_cast<std::uint64_t>(chunks);
            double s = 0.0;
            for (std::uint64_t code = begin; code < end; ++code)
                s += std::exp(cylinder_log_measure_code(mp, code, n).as_double());
            partial[static_cast<std::size_t>(c)] = s;
        }
        double sum = 0.0;
        for (double s : partial) sum += s;
        max_dev = std::max(max_dev, std::abs(sum - 1.0));

        const std::uint64_t parents = std::uint64_t{1} << (n - 1);
        const int pchunks = static_cast<int>(std::min<std::uint64_t>(parents, 256));
        std::vector<double> pworst(static_cast<std::size_t>(pchunks), 0.0);
        const std::uint64_t child_bit = std::uint64_t{1} << (n - 1);
#pragma omp parallel for schedule(static)
        for (int c = 0; c < pchunks; ++c) {
            const std::uint64_t begin = parents * static_cast<std::uint64_t>(c) /
                                        static_cast<std::uint64_t>(pchunks);
            const std::uint64_t end = parents * (static_cast<std::uint64_t>(c) + 1) /
                                      static_cast<std::uint64_t>(pchunks);
            double worst = 0.0;
            for (std::uint64_t code = begin; code < end; ++code) {
                const double m =
                    std::exp(cylinder_log_measure_code(mp, code, n - 1).as_double());
                const double m0 =
                    std::exp(cylinder_log_measure_code(mp, code, n).as_double());
                const double m1 = std::exp(
                    cylinder_log_measure_code(mp, code | child_bit, n).as_double());
                worst = std::max(worst, std::abs(m - (m0 + m1)));
            }
            pworst[static_cast<std::size_t>(c)] = worst;
        }
        for (double v : pworst) max_dev = std::max(max_dev, v);
    }

    std::ostringstream details;
    details << detail::param_details(mp) << " n_max=" << n_max;
    return finish_report("enumerate_measure", 0.0, max_dev, 1e-10, n_max, 0,
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

    struct Best {
        double d = -1.0;
        std::size_t i = 0;
    };
    const int chunks = 256;
    std::vector<Best> best(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::size_t begin =
            grid_size * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
        const std::size_t end = grid_size * (static_cast<std::size_t>(c) + 1) /
                                static_cast<std::size_t>(chunks);
        Best b;
        for (std::size_t i = begin; i < end; ++i) {
            const double p = p_at(i);
            const double d = dim_at(p, curve_q(alpha, p));
            if (d > b.d) {
                b.d = d;
                b.i = i;
            }
        }
        best[static_cast<std::size_t>(c)] = b;
    }
    Best overall;
    for (const Best& b : best)
        if (b.d > overall.d) overall = b;

    const double p = p_at(overall.i);
    const double q = curve_q(alpha, p);
    return {p, q, dim_at(p, q)};
}

VerificationReport golden_membership_check(const MeasureParams& mp, std::size_t n,
                                           int n_paths, SamplerSeed base) {
    if (mp.q() != 0.0)
        throw NonZeroQ("membership check applies to the q = 0 measure only");
    check_mc_preconditions(n, n_paths);
    std::vector<double> counts(static_cast<std::size_t>(n_paths));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_paths; ++i) {
        const BinaryWord w = sample_prefix(
            mp, n, {base.seed, base.stream + static_cast<std::uint64_t>(i)});
        counts[static_cast<std::size_t>(i)] =
            static_cast<double>(count_pattern11(w, n));
    }
    double worst = 0.0;
    for (double c : counts) worst = std::max(worst, c);
    return finish_report("golden_membership", 0.0, worst, 0.0,
                         static_cast<std::int64_t>(n), n_paths,
                         detail::param_details(mp));
}

TelescopeResidual telescope_residual_routes(const IfsParams& params,
                                            const SpectrumPoint& point,
                                            const BinaryWord& w, std::size_t n) {
    if (n % 2 != 0) throw OddPrefix("telescope residual needs an even prefix");
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    const double p = point.p;
    const double q = point.q;
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
        throw DegenerateParams("telescope residual needs interior (p, q)");

    const MeasureParams mp(p, q);
    const double nn = static_cast<double>(n);
    const double h = -cylinder_log_measure(mp, w, n).as_double();
    const double l = -log_diameter(params, w, n);

    TelescopeResidual r;
    r.direct = (l * point.dimension - h) / nn;

    const double x1_half = static_cast<double>(count_ones(w, n / 2));
    const double x1 = static_cast<double>(count_ones(w, n));
    const double x11 = static_cast<double>(count_pattern11(w, n));
    const double ratio_log =
        std::log(p) + std::log(1.0 - q) - std::log(1.0 - p) - std::log(q);
    const double window_log = std::log((1.0 - q) / (1.0 - p));
    r.telescoped = (point.alpha / 2.0 - x11 / nn) * ratio_log +
                   0.5 * (x1_half / (nn / 2.0) - x1 / nn) * window_log;
    return r;
}

double telescope_residual(const IfsParams& params, const SpectrumPoint& point,
                          const BinaryWord& w, std::size_t n) {
    return telescope_residual_routes(params, point, w, n).direct;
}

std::vector<VerificationReport> run_battery(const IfsParams& params, double alpha,
                                            SamplerSeed seed, std::size_t depth,
                                            int n_paths) {
    std::vector<VerificationReport> reports;
    const SpectrumPoint point = solve_alpha(params, alpha);
    const MeasureParams mp(point.p, point.q);
    const std::size_t short_depth = std::min<std::size_t>(depth, 65536);

    reports.push_back(enumerate_check(mp, 15));
    reports.push_back(
        mc_frequency_check(mp, depth, n_paths, {seed.seed, std::uint64_t{0} << 32}));

    const std::size_t local_depth = std::clamp<std::size_t>(depth, 16384, 65536);
    try {
        reports.push_back(mc_local_dimension(params, mp, local_depth, n_paths,
                                             {seed.seed, std::uint64_t{1} << 32}));
    } catch (const DegenerateParams& e) {
        reports.push_back(skipped_report("mc_local_dimension", e.what()));
    }

    reports.push_back(golden_membership_check(
        MeasureParams(solve_golden_p(params), 0.0), short_depth, n_paths,
        {seed.seed, std::uint64_t{2} << 32}));

    if (alpha > 0.0 && alpha < 1.0) {
        const std::size_t grid_size = 100000;
        const GridMaxResult grid = grid_maximize_D(params, alpha, grid_size);
        const double step =
            (1.0 - curve_p_min(alpha)) / static_cast<double>(grid_size + 1);
        reports.push_back(finish_report(
            "grid_vs_solver_p", point.p, grid.p, 2.0 * step,
            static_cast<std::int64_t>(grid_size), 0, "argmax location vs solved root"));
        reports.push_back(finish_report(
            "grid_vs_solver_dim", point.dimension, grid.dimension, 1e-7,
            static_cast<std::int64_t>(grid_size), 0, "grid maximum vs solved dimension"));
    } else {
        reports.push_back(
            skipped_report("grid_vs_solver_p", "degenerate curve at alpha 0 or 1"));
        reports.push_back(
            skipped_report("grid_vs_solver_dim", "degenerate curve at alpha 0 or 1"));
    }

    try {
        const BinaryWord path =
            sample_prefix(MeasureParams(point.p, point.q), short_depth,
                          {seed.seed, std::uint64_t{3} << 32});
        const TelescopeResidual routes =
            telescope_residual_routes(params, point, path, short_depth);

        double identity_gap = std::abs(routes.direct - routes.telescoped);
        const BinaryWord zeros = BinaryWord::from_code(0, 64);
        const TelescopeResidual zr =
            telescope_residual_routes(params, point, zeros, 64);
        identity_gap = std::max(identity_gap, std::abs(zr.direct - zr.telescoped));
        for (int i = 0; i < 16; ++i) {
            const BinaryWord rw = sample_prefix(
                MeasureParams(0.5, 0.5), 64,
                {seed.seed, (std::uint64_t{4} << 32) + static_cast<std::uint64_t>(i)});
            const TelescopeResidual rr =
                telescope_residual_routes(params, point, rw, 64);
            identity_gap = std::max(identity_gap, std::abs(rr.direct - rr.telescoped));
        }
        reports.push_back(finish_report("telescope_identity", 0.0, identity_gap,
                                        1e-10, 64, 17,
                                        "two evaluation routes on fixed words"));
        reports.push_back(finish_report(
            "telescope_residual", 0.0, std::abs(routes.direct), 0.01,
            static_cast<std::int64_t>(short_depth), 1, "sampled typical path"));
    } catch (const DegenerateParams& e) {
        reports.push_back(skipped_report("telescope_identity", e.what()));
        reports.push_back(skipped_report("telescope_residual", e.what()));
    }

    return reports;
}

}  // namespace mfspec
