#ifndef MFSPEC_MEASURE_HPP
#define MFSPEC_MEASURE_HPP

#include <cstddef>
#include <limits>

#include "mfspec/errors.hpp"
#include "mfspec/rng.hpp"
#include "mfspec/word.hpp"

namespace mfspec {

/// Parameters (p, q) of the telescopic product measure: odd positions
/// are independent coins with P(1) = p, and position 2k is drawn with
/// P(1) = p when position k holds 0 and P(1) = q when it holds 1.
/// q = 0 reproduces the one-parameter golden-shift measure.
class MeasureParams {
public:
    MeasureParams(double p, double q);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    bool interior() const noexcept {
        return p_ > 0.0 && p_ < 1.0 && q_ > 0.0 && q_ < 1.0;
    }

private:
    double p_;
    double q_;
};

/// Extended-real log measure: either a finite log or an exact zero
/// measure. The zero case is a tag, not a -inf double fed through
/// arithmetic.
struct LogMeasure {
    double log_value = 0.0;
    bool is_zero = false;

    static LogMeasure zero() noexcept { return {0.0, true}; }
    static LogMeasure from_log(double v) noexcept { return {v, false}; }

    double as_double() const noexcept {
        return is_zero ? -std::numeric_limits<double>::infinity() : log_value;
    }
};

/// log mu_{p,q}([w]): odd positions contribute marginal factors, pairs
/// (k, 2k) contribute transition factors. The empty word has log 0.
LogMeasure cylinder_log_measure(const MeasureParams& mp, const BinaryWord& w);

/// Same, restricted to the first n symbols.
LogMeasure cylinder_log_measure(const MeasureParams& mp, const BinaryWord& w,
                                std::size_t n);

/// Same cylinder measure for the word whose position k is bit (k-1) of
/// `code`; used by the exhaustive enumeration kernels.
LogMeasure cylinder_log_measure_code(const MeasureParams& mp, std::uint64_t code,
                                     std::size_t n);

/// Draw the first n coordinates of a mu_{p,q}-distributed sequence.
/// Positions are generated in increasing order, so the parent of an
/// even position is always available.
BinaryWord sample_prefix(const MeasureParams& mp, std::size_t n, SamplerSeed seed);

/// Closed-form -log mu_{p,q}(C_n(w)) built from the counting statistics
/// X1^{n/2}, X1^n, X11^n; equals -cylinder_log_measure on the same
/// prefix. Requires interior (p, q) and even n.
double entropy_decomposition(const MeasureParams& mp, const BinaryWord& w,
                             std::size_t n);

/// (2/n) * count_pattern11(w, n): the running multiple ergodic average.
double empirical_multiple_average(const BinaryWord& w, std::size_t n);

/// (2/n) * #(1s among positions n/2+1 .. n): dyadic-window frequency.
double empirical_ones_window(const BinaryWord& w, std::size_t n);

}  // namespace mfspec

#endif
