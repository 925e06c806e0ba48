#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "mfspec/ifs.hpp"
#include "mfspec/rng.hpp"
#include "test_util.hpp"

using namespace mfspec;
using testutil::close_abs;
using testutil::close_rel;

namespace {
const double kLn2 = std::log(2.0);
const double kLn4 = std::log(4.0);
}  // namespace

TEST_CASE("validate_params accepts valid exponent pairs") {
    const IfsParams equal = validate_params(kLn2, kLn2);
    CHECK(close_abs(equal.ratio0(), 0.5, 1e-15));
    CHECK(close_abs(equal.ratio1(), 0.5, 1e-15));

    const IfsParams uneven = validate_params(kLn2, kLn4);
    CHECK(close_abs(uneven.ratio0(), 0.5, 1e-15));
    CHECK(close_abs(uneven.ratio1(), 0.25, 1e-15));
}

TEST_CASE("validate_params rejects bad input") {
    CHECK_THROWS_AS(validate_params(kLn2, std::log(4.0 / 3.0)), OpenSetViolation);
    CHECK_THROWS_AS(validate_params(0.0, kLn2), NonPositiveExponent);
    CHECK_THROWS_AS(validate_params(kLn2, -1.0), NonPositiveExponent);
    CHECK_THROWS_AS(validate_params(std::nan(""), kLn2), NonPositiveExponent);
}

TEST_CASE("project_word maps cylinders to intervals") {
    const IfsParams equal(kLn2, kLn2);
    const Interval i0 = project_word(equal, BinaryWord("0"));
    CHECK(close_abs(i0.left, 0.0, 1e-15));
    CHECK(close_abs(i0.right(), 0.5, 1e-15));

    const Interval i10 = project_word(equal, BinaryWord("10"));
    CHECK(close_abs(i10.left, 0.5, 1e-15));
    CHECK(close_abs(i10.right(), 0.75, 1e-15));

    const IfsParams uneven(kLn2, kLn4);
    const Interval i1 = project_word(uneven, BinaryWord("1"));
    CHECK(close_abs(i1.left, 0.75, 1e-15));
    CHECK(close_abs(i1.right(), 1.0, 1e-15));

    const Interval whole = project_word(equal, BinaryWord(""));
    CHECK(whole.left == 0.0);
    CHECK(whole.length == 1.0);
}

TEST_CASE("log_diameter closed form") {
    const IfsParams equal(kLn2, kLn2);
    CHECK(close_abs(log_diameter(equal, BinaryWord("010")), -3.0 * kLn2, 1e-12));
    CHECK(close_abs(log_diameter(equal, BinaryWord("111")), -3.0 * kLn2, 1e-12));

    const IfsParams uneven(kLn2, kLn4);
    CHECK(close_abs(log_diameter(uneven, BinaryWord("11")), -2.0 * kLn4, 1e-12));
    CHECK(close_abs(log_diameter(uneven, BinaryWord("10")), -std::log(8.0), 1e-12));
}

TEST_CASE("log_diameter matches projected interval length") {
    const CounterRng rng({2024, 0});
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const double l0 = 0.7 + 2.0 * rng.uniform(ctr++);
        const double l1 = 0.7 + 2.0 * rng.uniform(ctr++);
        const IfsParams params(l0, l1);
        const std::size_t len = 1 + static_cast<std::size_t>(rng.uniform(ctr++) * 60);
        std::vector<std::uint8_t> bits(len);
        for (auto& b : bits) b = rng.uniform(ctr++) < 0.5 ? 0 : 1;
        const BinaryWord w{bits};
        const double len_direct = project_word(params, w).length;
        CHECK(close_rel(std::exp(log_diameter(params, w)), len_direct, 1e-12));
    }
}

TEST_CASE("projected cylinders of one generation tile without overlap") {
    for (const IfsParams& params : {IfsParams(kLn2, kLn2), IfsParams(kLn2, kLn4)}) {
        for (std::size_t n = 1; n <= 10; ++n) {
            std::vector<Interval> cells;
            double total = 0.0;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
                cells.push_back(project_word(params, BinaryWord::from_code(code, n)));
                total += cells.back().length;
            }
            const double expected =
                std::pow(params.ratio0() + params.ratio1(), static_cast<double>(n));
            CHECK(close_rel(total, expected, 1e-12));

            std::sort(cells.begin(), cells.end(),
                      [](const Interval& a, const Interval& b) { return a.left < b.left; });
            for (std::size_t i = 1; i < cells.size(); ++i)
                CHECK(cells[i].left >= cells[i - 1].right() - 1e-12);
        }
    }
}

TEST_CASE("count_ones and count_pattern11") {
    const BinaryWord w1010("1010");
    CHECK(count_ones(w1010, 4) == 2);
    CHECK(count_ones(BinaryWord("0000"), 4) == 0);
    CHECK(count_ones(BinaryWord("1111"), 3) == 3);
    CHECK_THROWS_AS(count_ones(w1010, 5), PrefixTooShort);

    CHECK(count_pattern11(BinaryWord("1100"), 4) == 1);
    CHECK(count_pattern11(BinaryWord("0000"), 4) == 0);
    CHECK(count_pattern11(BinaryWord("1111"), 4) == 2);
    CHECK_THROWS_AS(count_pattern11(BinaryWord("1100"), 3), OddPrefix);
    CHECK_THROWS_AS(count_pattern11(BinaryWord("11"), 4), PrefixTooShort);
}

TEST_CASE("pattern count bounded by ones count and pair count") {
    const CounterRng rng({7, 7});
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t half = 1 + static_cast<std::size_t>(rng.uniform(ctr++) * 32);
        const std::size_t n = 2 * half;
        std::vector<std::uint8_t> bits(n);
        for (auto& b : bits) b = rng.uniform(ctr++) < 0.6 ? 1 : 0;
        const BinaryWord w{bits};
        const std::size_t hits = count_pattern11(w, n);
        CHECK(hits <= std::min(count_ones(w, n), n / 2));
    }
}

TEST_CASE("attractor dimension solves the Moran equation") {
    CHECK(close_abs(attractor_dimension(IfsParams(kLn2, kLn2)), 1.0, 1e-12));
    CHECK(close_abs(attractor_dimension(IfsParams(kLn4, kLn4)), 0.5, 1e-12));

    // golden case: x + x^2 = 1 with x = 2^-s
    const double x = (std::sqrt(5.0) - 1.0) / 2.0;
    const double expected = -std::log2(x);
    const double s = attractor_dimension(IfsParams(kLn2, kLn4));
    CHECK(close_abs(s, expected, 1e-12));
    CHECK(close_abs(s, 0.6942419136306173, 1e-12));
    CHECK(close_abs(std::exp(-s * kLn2) + std::exp(-s * kLn4), 1.0, 1e-12));
}

TEST_CASE("attractor dimension is monotone in each exponent") {
    std::vector<double> lambdas;
    for (int i = 0; i < 10; ++i) lambdas.push_back(0.75 + 0.2 * i);
    std::vector<std::vector<double>> dim(10, std::vector<double>(10));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            dim[i][j] = attractor_dimension(IfsParams(lambdas[i], lambdas[j]));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            if (i + 1 < 10) CHECK(dim[i + 1][j] <= dim[i][j] + 1e-12);
            if (j + 1 < 10) CHECK(dim[i][j + 1] <= dim[i][j] + 1e-12);
        }
}

TEST_CASE("binary word validation") {
    CHECK_THROWS_AS(BinaryWord("012"), InvalidSymbol);
    CHECK_THROWS_AS(BinaryWord(std::vector<std::uint8_t>{0, 2}), InvalidSymbol);
    CHECK_THROWS_AS(BinaryWord(std::vector<std::uint8_t>(kMaxWordLength + 1, 0)),
                    WordTooLong);
    const BinaryWord w = BinaryWord::from_code(0b1101, 4);
    CHECK(w.to_string() == "1011");  // position k carries bit k-1
}
