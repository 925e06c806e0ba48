#ifndef MFSPEC_IFS_HPP
#define MFSPEC_IFS_HPP

#include <cmath>
#include <cstddef>

#include "mfspec/errors.hpp"
#include "mfspec/word.hpp"

namespace mfspec {

/// Absolute slack when checking the open set condition, so that
/// exact-equality pairs survive decimal parsing.
inline constexpr double kOpenSetSlack = 1e-12;

/// Contraction exponents (lambda0, lambda1) of the two affine maps
///   f0(x) = e^{-lambda0} x,   f1(x) = e^{-lambda1} x + 1 - e^{-lambda1},
/// restricted by the open set condition e^{-l0} + e^{-l1} <= 1.
class IfsParams {
public:
    IfsParams(double lambda0, double lambda1);

    double lambda0() const noexcept { return lambda0_; }
    double lambda1() const noexcept { return lambda1_; }
    double ratio0() const noexcept { return ratio0_; }
    double ratio1() const noexcept { return ratio1_; }

private:
    double lambda0_;
    double lambda1_;
    double ratio0_;
    double ratio1_;
};

IfsParams validate_params(double lambda0, double lambda1);

/// Subinterval of [0, 1] stored as (left, length); the right endpoint
/// is derived, which stays accurate for very short intervals.
struct Interval {
    double left = 0.0;
    double length = 1.0;

    double right() const noexcept { return left + length; }
};

/// Image f_{w1} o ... o f_{wn} ([0,1]); the empty word maps to [0,1].
Interval project_word(const IfsParams& params, const BinaryWord& w);

/// log of the diameter of project_word: -(lambda1 * X1 + lambda0 * (n - X1)).
double log_diameter(const IfsParams& params, const BinaryWord& w);

/// Same, restricted to the first n symbols.
double log_diameter(const IfsParams& params, const BinaryWord& w, std::size_t n);

/// Number of 1s among the first n symbols.
std::size_t count_ones(const BinaryWord& w, std::size_t n);

/// Number of positions k <= n/2 with w_k = w_{2k} = 1 (n must be even).
std::size_t count_pattern11(const BinaryWord& w, std::size_t n);

/// Unique s in (0, 1] with e^{-s*lambda0} + e^{-s*lambda1} = 1
/// (similarity dimension of the attractor).
double attractor_dimension(const IfsParams& params);

}  // namespace mfspec

#endif
