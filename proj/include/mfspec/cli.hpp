#ifndef MFSPEC_CLI_HPP
#define MFSPEC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mfspec/oracle.hpp"
#include "mfspec/solver.hpp"

namespace mfspec::cli {

enum class OutputFormat { csv, json, svg };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    double lambda0 = 0.6931471805599453;  // ln 2
    double lambda1 = 0.6931471805599453;
    std::vector<double> alpha_grid;
    double alpha = 0.5;
    bool alpha_set = false;
    std::uint64_t seed = 42;
    int samples = 64;
    std::uint64_t depth = std::uint64_t{1} << 18;
    OutputFormat format = OutputFormat::csv;
    double tolerance = 1e-12;
};

/// Parse either a comma-separated list or an inclusive "a:b:step" range.
std::vector<double> parse_alpha_grid(const std::string& text);

/// Locale-independent rendering with 12 significant digits.
std::string format_number(double v);

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mfspec::cli

#endif
