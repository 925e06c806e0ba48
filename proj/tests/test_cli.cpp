// Process-level tests of the command-line interface: formats, exit
// codes and byte determinism. The binary path arrives via MFSPEC_CLI.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "mfspec/cli.hpp"
#include "test_util.hpp"

using nlohmann::json;
using testutil::close_abs;
using testutil::run_cli;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

const std::string kEqualFlags =
    "--lambda0 0.6931471805599453 --lambda1 0.6931471805599453";

}  // namespace

TEST_CASE("spectrum csv table") {
    REQUIRE(testutil::cli_path() != nullptr);
    const auto res = run_cli("spectrum " + kEqualFlags + " --alphas 0:1:0.25");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "alpha,p,q,dimension,residual_f,formula_spread");

    const std::vector<double> expected_dim{0.8113704627516491, 1.0,
                                           0.9119541919492124, 0.6578409562313320,
                                           0.0};
    for (int i = 0; i < 5; ++i) {
        const auto fields = fields_of(lines[i + 1]);
        REQUIRE(fields.size() == 6);
        CHECK(close_abs(std::stod(fields[0]), 0.25 * i, 1e-12));
        CHECK(close_abs(std::stod(fields[3]), expected_dim[i], 1e-6));

        // values are rendered with at most 12 significant digits
        for (const std::string& f : fields)
            CHECK(mfspec::cli::format_number(std::stod(f)) == f);
    }
    CHECK(fields_of(lines[5])[3] == "0");  // the alpha = 1 row is exactly zero
}

TEST_CASE("verify passes with stock flags") {
    const auto res = run_cli("verify");
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    CHECK(doc["all_passed"].get<bool>());
    CHECK(doc["depth"].get<std::uint64_t>() == (std::uint64_t{1} << 18));
    CHECK(doc["seed"].get<std::uint64_t>() == 42);
}

TEST_CASE("spectrum json matches csv and round-trips") {
    const auto csv = run_cli("spectrum " + kEqualFlags + " --alphas 0:1:0.25");
    const auto js = run_cli("spectrum " + kEqualFlags + " --alphas 0:1:0.25 --format json");
    REQUIRE(js.exit_code == 0);

    const json arr = json::parse(js.output);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);

    const auto lines = lines_of(csv.output);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto fields = fields_of(lines[i + 1]);
        CHECK(close_abs(arr[i]["alpha"].get<double>(), std::stod(fields[0]), 1e-9));
        CHECK(close_abs(arr[i]["p"].get<double>(), std::stod(fields[1]), 1e-9));
        CHECK(close_abs(arr[i]["dimension"].get<double>(), std::stod(fields[3]), 1e-9));
    }

    // parse -> dump is idempotent
    const std::string once = json::parse(js.output).dump(2);
    const std::string twice = json::parse(once).dump(2);
    CHECK(once == twice);
    CHECK(once + "\n" == js.output);
}

TEST_CASE("identical configuration gives byte-identical output") {
    const std::string cmd = "spectrum --alphas 0:1:0.1 --format json";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const std::string vcmd = "verify --depth 16384 --samples 16 --seed 7";
    const auto va = run_cli(vcmd);
    const auto vb = run_cli(vcmd);
    CHECK(va.exit_code == 0);
    CHECK(va.output == vb.output);
}

TEST_CASE("solve emits the point with formula diagnostics") {
    const auto res = run_cli("solve --alpha 0.5 --format json");
    REQUIRE(res.exit_code == 0);
    const json obj = json::parse(res.output);
    CHECK(close_abs(obj["p"].get<double>(), 0.5791089609767459, 1e-8));
    CHECK(close_abs(obj["q"].get<double>(), 0.7776749143859158, 1e-8));
    CHECK(close_abs(obj["dimension"].get<double>(), 0.9119541919492124, 1e-8));
    CHECK(obj["dim_from_lambda_diff"].is_null());  // equal exponents
    CHECK(close_abs(obj["dim_entropy_lyapunov"].get<double>(),
                    obj["dimension"].get<double>(), 1e-8));

    const auto csv = run_cli("solve --alpha 0.5");
    const auto lines = lines_of(csv.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "alpha,p,q,dimension,residual_f,formula_spread,dim_from_lambda0,"
          "dim_from_lambda1,dim_from_lambda_diff,dim_entropy_lyapunov");

    const auto uneven = run_cli(
        "solve --alpha 0.3 --lambda0 0.6931471805599453 "
        "--lambda1 1.3862943611198906 --format json");
    const json uobj = json::parse(uneven.output);
    CHECK(!uobj["dim_from_lambda_diff"].is_null());

    // alpha = 1 collapses to the point (1, 1) with dimension zero
    const auto top = run_cli("solve --alpha 1 --format json");
    const json tobj = json::parse(top.output);
    CHECK(tobj["dimension"].get<double>() == 0.0);
}

TEST_CASE("ratio flags are equivalent to exponent flags") {
    const auto from_ratio =
        run_cli("solve --ratio0 0.5 --ratio1 0.25 --alpha 0 --format json");
    const auto from_lambda = run_cli(
        "solve --lambda0 0.6931471805599453 --lambda1 1.3862943611198906 "
        "--alpha 0 --format json");
    REQUIRE(from_ratio.exit_code == 0);
    REQUIRE(from_lambda.exit_code == 0);
    const json a = json::parse(from_ratio.output);
    const json b = json::parse(from_lambda.output);
    CHECK(close_abs(a["p"].get<double>(), b["p"].get<double>(), 1e-12));
    CHECK(close_abs(a["dimension"].get<double>(), b["dimension"].get<double>(), 1e-12));
    CHECK(close_abs(a["dimension"].get<double>(), 0.6125377883690140, 1e-9));
}

TEST_CASE("verify emits a machine-readable report") {
    const auto res = run_cli("verify --depth 16384 --samples 16");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.output);
    CHECK(doc["all_passed"].get<bool>());
    CHECK(doc["reports"].is_array());
    CHECK(doc["reports"].size() >= 6);
    for (const auto& r : doc["reports"]) {
        CHECK(r.contains("name"));
        CHECK(r.contains("estimate"));
        CHECK(r.contains("passed"));
        if (!r["skipped"].get<bool>()) CHECK(r["passed"].get<bool>());
    }
}

TEST_CASE("plot produces a standalone svg") {
    const auto res = run_cli("plot --alphas 0:1:0.01");
    REQUIRE(res.exit_code == 0);
    const std::string& svg = res.output;
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("class=\"ref\"") != std::string::npos);
    CHECK(svg.find("class=\"dot\"") != std::string::npos);

    // the polyline peaks at alpha = 0.25 (the Lebesgue point)
    const auto begin = svg.find("points=\"");
    REQUIRE(begin != std::string::npos);
    const auto end = svg.find('"', begin + 8);
    std::istringstream points(svg.substr(begin + 8, end - begin - 8));
    std::string pair;
    double best_x = -1.0, best_y = 1e9;
    int count = 0;
    while (points >> pair) {
        const auto comma = pair.find(',');
        const double x = std::stod(pair.substr(0, comma));
        const double y = std::stod(pair.substr(comma + 1));
        if (y < best_y) {
            best_y = y;
            best_x = x;
        }
        ++count;
    }
    CHECK(count == 101);
    const double x_expected = 70.0 + 0.25 * (720.0 - 70.0 - 24.0);
    CHECK(close_abs(best_x, x_expected, 6.3));

    const auto tiny = run_cli("plot --alphas 0,1");
    CHECK(tiny.exit_code == 0);
    CHECK(tiny.output.find("<polyline") != std::string::npos);
}

TEST_CASE("usage and parameter errors exit with code 2") {
    CHECK(run_cli("spectrum --lambda0 0.6931 --lambda1 0.2877 --alphas 0:1:0.5")
              .exit_code == 2);  // open set violation
    CHECK(run_cli("verify --depth 1000").exit_code == 2);
    CHECK(run_cli("verify --samples 4").exit_code == 2);
    CHECK(run_cli("solve --alpha 0.5 --lambda0 0.7 --ratio0 0.5").exit_code == 2);
    CHECK(run_cli("spectrum --alphas 0:1:0.25 --format yaml").exit_code == 2);
    CHECK(run_cli("spectrum --alphas 0.5,0.2").exit_code == 2);
    CHECK(run_cli("spectrum --alphas 0.5,1.5").exit_code == 2);
    CHECK(run_cli("spectrum --alphas 0:1:0.25 --out /nonexistent_dir/x.csv")
              .exit_code == 2);
    CHECK(run_cli("plot --alphas 0.5").exit_code == 2);
    CHECK(run_cli("solve").exit_code == 2);          // missing --alpha
    CHECK(run_cli("nonsense").exit_code == 2);       // unknown subcommand
    CHECK(run_cli("spectrum --alphas 0:1:0.25 --format svg").exit_code == 2);
    CHECK(run_cli("solve --alpha 1.5").exit_code == 2);
}

TEST_CASE("alpha grid parsing") {
    using mfspec::cli::parse_alpha_grid;
    const auto grid = parse_alpha_grid("0:1:0.25");
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 1.0);  // inclusive when the step divides the span

    const auto ragged = parse_alpha_grid("0:1:0.3");
    REQUIRE(ragged.size() == 4);
    CHECK(close_abs(ragged.back(), 0.9, 1e-12));

    const auto listed = parse_alpha_grid("0.1,0.5,0.9");
    REQUIRE(listed.size() == 3);
    CHECK(listed[1] == 0.5);

    CHECK_THROWS_AS(parse_alpha_grid("0:1:0"), mfspec::OutOfRange);
    CHECK_THROWS_AS(parse_alpha_grid("1:0:0.1"), mfspec::OutOfRange);
    CHECK_THROWS_AS(parse_alpha_grid("abc"), mfspec::OutOfRange);
    CHECK_THROWS_AS(parse_alpha_grid("0:1:1e-9"), mfspec::OutOfRange);
}
