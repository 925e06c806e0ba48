#ifndef MFSPEC_ORACLE_HPP
#define MFSPEC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfspec/solver.hpp"

namespace mfspec {

/// Structured outcome of one oracle run. `passed` always means
/// |estimate - target| <= tolerance; a skipped report records why the
/// check did not apply and never fails a battery.
struct VerificationReport {
    std::string name;
    double target = 0.0;
    double estimate = 0.0;
    double tolerance = 0.0;
    std::int64_t n_used = 0;
    int seeds_used = 0;
    bool passed = false;
    bool skipped = false;
    std::string details;
};

/// Average of the empirical multiple average over independent sample
/// paths against the almost-sure limit 2pq/(2+p-q). Tolerance is a
/// 5-sigma band plus an O(1/n) transient allowance.
VerificationReport mc_frequency_check(const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base);

/// Average of (-log measure)/(-log diameter) at depth n along sampled
/// paths against the dimension functional D(p, q).
VerificationReport mc_local_dimension(const IfsParams& params,
                                      const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base);

/// Exhaustive check, for every level up to n_max, that cylinder
/// measures sum to 1 and split additively; reports the worst deviation.
VerificationReport enumerate_check(const MeasureParams& mp, int n_max);

struct GridMaxResult {
    double p = 0.0;
    double q = 0.0;
    double dimension = 0.0;
};

/// Brute-force argmax of D along the constraint curve on a uniform
/// p-grid; the independent oracle for solve_alpha.
GridMaxResult grid_maximize_D(const IfsParams& params, double alpha,
                              std::size_t grid_size);

/// Every path sampled from mu_{p,0} must avoid the (k, 2k) pattern.
VerificationReport golden_membership_check(const MeasureParams& mp, std::size_t n,
                                           int n_paths, SamplerSeed base);

struct TelescopeResidual {
    double direct = 0.0;      // (1/n) (l_n * dim - h_n) from measure and diameter
    double telescoped = 0.0;  // the two-summand counting form
};

/// Both evaluation routes of the upper-bound residual at a solved
/// point; they agree pointwise on any word, and the residual vanishes
/// along typical paths as n grows.
TelescopeResidual telescope_residual_routes(const IfsParams& params,
                                            const SpectrumPoint& point,
                                            const BinaryWord& w, std::size_t n);

double telescope_residual(const IfsParams& params, const SpectrumPoint& point,
                          const BinaryWord& w, std::size_t n);

/// The full oracle battery around one solved level; drives `verify`.
std::vector<VerificationReport> run_battery(const IfsParams& params, double alpha,
                                            SamplerSeed seed, std::size_t depth,
                                            int n_paths);

namespace serial {
// Reference implementations of the parallel kernels (plain loops, same
// chunk-free arithmetic); tests pin the parallel results against them.
VerificationReport mc_frequency_check(const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base);
VerificationReport mc_local_dimension(const IfsParams& params,
                                      const MeasureParams& mp, std::size_t n,
                                      int n_paths, SamplerSeed base);
VerificationReport enumerate_check(const MeasureParams& mp, int n_max);
GridMaxResult grid_maximize_D(const IfsParams& params, double alpha,
                              std::size_t grid_size);
}  // namespace serial

}  // namespace mfspec

#endif
