#include "mfspec/measure.hpp"

#include <cmath>

#include "mfspec/ifs.hpp"

namespace mfspec {

MeasureParams::MeasureParams(double p, double q) : p_(p), q_(q) {
    if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("p must lie in [0, 1]");
    if (!(q >= 0.0 && q <= 1.0)) throw OutOfRange("q must lie in [0, 1]");
}

namespace {

// Factor multiplicities of one cylinder: odd positions contribute p / 1-p
// marginals, pairs (k, 2k) contribute the transition entries
//   parent 0: 1-p, p      parent 1: 1-q, q.
// Counting multiplicities first keeps the log sum down to four terms.
template <class SymbolAt>
LogMeasure log_measure_core(const MeasureParams& mp, std::size_t n, SymbolAt at) {
    std::size_t odd_ones = 0;
    std::size_t odd_zeros = 0;
    std::size_t pair_01 = 0, pair_00 = 0, pair_11 = 0, pair_10 = 0;
    for (std::size_t k = 1; k <= n; k += 2) at(k) ? ++odd_ones : ++odd_zeros;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        if (at(k)) {
            at(2 * k) ? ++pair_11 : ++pair_10;
        } else {
            at(2 * k) ? ++pair_01 : ++pair_00;
        }
    }

    const double p = mp.p();
    const double q = mp.q();
    const std::size_t mult_p = odd_ones + pair_01;
    const std::size_t mult_1p = odd_zeros + pair_00;
    if ((mult_p > 0 && p == 0.0) || (mult_1p > 0 && p == 1.0) ||
        (pair_11 > 0 && q == 0.0) || (pair_10 > 0 && q == 1.0))
        return LogMeasure::zero();

    double acc = 0.0;
    if (mult_p > 0) acc += static_cast<double>(mult_p) * std::log(p);
    if (mult_1p > 0) acc += static_cast<double>(mult_1p) * std::log(1.0 - p);
    if (pair_11 > 0) acc += static_cast<double>(pair_11) * std::log(q);
    if (pair_10 > 0) acc += static_cast<double>(pair_10) * std::log(1.0 - q);
    return LogMeasure::from_log(acc);
}

}  // namespace

LogMeasure cylinder_log_measure(const MeasureParams& mp, const BinaryWord& w,
                                std::size_t n) {
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    return log_measure_core(mp, n, [&](std::size_t k) { return w.symbol(k); });
}

LogMeasure cylinder_log_measure(const MeasureParams& mp, const BinaryWord& w) {
    return cylinder_log_measure(mp, w, w.length());
}

LogMeasure cylinder_log_measure_code(const MeasureParams& mp, std::uint64_t code,
                                     std::size_t n) {
    return log_measure_core(mp, n, [code](std::size_t k) {
        return static_cast<int>((code >> (k - 1)) & 1u);
    });
}

BinaryWord sample_prefix(const MeasureParams& mp, std::size_t n, SamplerSeed seed) {
    if (n > kMaxWordLength) throw WordTooLong("sample length exceeds 2^20");
    const CounterRng rng(seed);
    const double p = mp.p();
    const double q = mp.q();
    std::vector<std::uint8_t> bits(n);
    for (std::size_t k = 1; k <= n; ++k) {
        double prob;
        if (k % 2 == 1) {
            prob = p;
        } else {
            prob = bits[k / 2 - 1] ? q : p;
        }
        bits[k - 1] = rng.uniform(k) < prob ? 1 : 0;
    }
    return BinaryWord(std::move(bits));
}

double entropy_decomposition(const MeasureParams& mp, const BinaryWord& w,
                             std::size_t n) {
    if (n % 2 != 0) throw OddPrefix("decomposition needs an even prefix");
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    if (!mp.interior())
        throw DegenerateParams("decomposition needs p, q strictly inside (0, 1)");

    const double p = mp.p();
    const double q = mp.q();
    const double x1_half = static_cast<double>(count_ones(w, n / 2));
    const double x1 = static_cast<double>(count_ones(w, n));
    const double x11 = static_cast<double>(count_pattern11(w, n));

    const double neg_h = static_cast<double>(n) * std::log(1.0 - p) +
                         x1_half * std::log((1.0 - q) / (1.0 - p)) +
                         x1 * std::log(p / (1.0 - p)) -
                         x11 * std::log(p * (1.0 - q) / ((1.0 - p) * q));
    return -neg_h;
}

double empirical_multiple_average(const BinaryWord& w, std::size_t n) {
    if (n == 0) throw OutOfRange("average needs a positive prefix length");
    return 2.0 * static_cast<double>(count_pattern11(w, n)) / static_cast<double>(n);
}

double empirical_ones_window(const BinaryWord& w, std::size_t n) {
    if (n == 0) throw OutOfRange("window needs a positive prefix length");
    if (n % 2 != 0) throw OddPrefix("window needs an even prefix");
    if (n > w.length()) throw PrefixTooShort("prefix length exceeds word length");
    std::size_t ones = 0;
    for (std::size_t k = n / 2 + 1; k <= n; ++k)
        ones += static_cast<std::size_t>(w.symbol(k));
    return 2.0 * static_cast<double>(ones) / static_cast<double>(n);
}

}  // namespace mfspec
