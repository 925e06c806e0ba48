#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mfspec/cli.hpp"

namespace {

struct RawOptions {
    double lambda0 = 0.6931471805599453;
    double lambda1 = 0.6931471805599453;
    double ratio0 = 0.5;
    double ratio1 = 0.5;
    std::string alphas;
    double alpha = 0.5;
    std::uint64_t seed = 42;
    int samples = 64;
    std::uint64_t depth = std::uint64_t{1} << 18;
    std::string format = "csv";
    std::string out_path;
    double tolerance = 1e-12;
};

struct CmdOptions {
    CLI::App* cmd = nullptr;
    CLI::Option* ratio0 = nullptr;
    CLI::Option* ratio1 = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* alphas = nullptr;
};

CmdOptions add_common(CLI::App* cmd, RawOptions& raw, bool need_alphas,
                      bool need_alpha) {
    CmdOptions opts;
    opts.cmd = cmd;
    auto* l0 = cmd->add_option("--lambda0", raw.lambda0,
                               "contraction exponent of the left branch");
    auto* l1 = cmd->add_option("--lambda1", raw.lambda1,
                               "contraction exponent of the right branch");
    opts.ratio0 =
        cmd->add_option("--ratio0", raw.ratio0, "left contraction ratio e^-lambda0");
    opts.ratio1 =
        cmd->add_option("--ratio1", raw.ratio1, "right contraction ratio e^-lambda1");
    l0->excludes(opts.ratio0);
    opts.ratio0->excludes(l0);
    l1->excludes(opts.ratio1);
    opts.ratio1->excludes(l1);

    opts.alphas = cmd->add_option(
        "--alphas", raw.alphas, "levels: comma list a,b,c or inclusive range a:b:step");
    if (need_alphas) opts.alphas->required();
    opts.alpha = cmd->add_option("--alpha", raw.alpha, "single level in [0, 1]");
    if (need_alpha) opts.alpha->required();

    cmd->add_option("--seed", raw.seed, "base seed for sampling");
    cmd->add_option("--samples", raw.samples, "number of Monte Carlo paths");
    cmd->add_option("--depth", raw.depth, "Monte Carlo prefix length (power of two)");
    cmd->add_option("--format", raw.format, "output format: csv, json or svg");
    cmd->add_option("--out", raw.out_path, "output path (default: stdout)");
    cmd->add_option("--tolerance", raw.tolerance, "root-finding residual target");
    return opts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Hausdorff-dimension spectrum of multiple ergodic averages on "
        "two-branch self-similar sets"};
    app.require_subcommand(1);

    RawOptions raw;
    CLI::App* spectrum = app.add_subcommand("spectrum", "solve a grid of levels");
    CLI::App* solve = app.add_subcommand("solve", "solve a single level");
    CLI::App* verify = app.add_subcommand("verify", "run the oracle battery");
    CLI::App* plot = app.add_subcommand("plot", "render the spectrum as SVG");

    const CmdOptions opt_spectrum = add_common(spectrum, raw, true, false);
    const CmdOptions opt_solve = add_common(solve, raw, false, true);
    const CmdOptions opt_verify = add_common(verify, raw, false, false);
    const CmdOptions opt_plot = add_common(plot, raw, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mfspec::cli::kExitUsage;
    }

    const CmdOptions* active = nullptr;
    for (const CmdOptions* o : {&opt_spectrum, &opt_solve, &opt_verify, &opt_plot})
        if (o->cmd->parsed()) active = o;

    mfspec::cli::RunConfig cfg;
    cfg.lambda0 = raw.lambda0;
    cfg.lambda1 = raw.lambda1;
    if (active->ratio0->count() > 0) {
        if (!(raw.ratio0 > 0.0)) {
            std::cerr << "error: --ratio0 must be positive\n";
            return mfspec::cli::kExitUsage;
        }
        cfg.lambda0 = -std::log(raw.ratio0);
    }
    if (active->ratio1->count() > 0) {
        if (!(raw.ratio1 > 0.0)) {
            std::cerr << "error: --ratio1 must be positive\n";
            return mfspec::cli::kExitUsage;
        }
        cfg.lambda1 = -std::log(raw.ratio1);
    }
    cfg.alpha = raw.alpha;
    cfg.alpha_set = active->alpha->count() > 0;
    cfg.seed = raw.seed;
    cfg.samples = raw.samples;
    cfg.depth = raw.depth;
    cfg.tolerance = raw.tolerance;

    if (active->alphas->count() > 0) {
        try {
            cfg.alpha_grid = mfspec::cli::parse_alpha_grid(raw.alphas);
        } catch (const mfspec::Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return mfspec::cli::kExitUsage;
        }
    }

    if (raw.format == "csv") {
        cfg.format = mfspec::cli::OutputFormat::csv;
    } else if (raw.format == "json") {
        cfg.format = mfspec::cli::OutputFormat::json;
    } else if (raw.format == "svg") {
        cfg.format = mfspec::cli::OutputFormat::svg;
    } else {
        std::cerr << "error: --format must be csv, json or svg\n";
        return mfspec::cli::kExitUsage;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!raw.out_path.empty()) {
        file.open(raw.out_path);
        if (!file) {
            std::cerr << "error: cannot open output path '" << raw.out_path << "'\n";
            return mfspec::cli::kExitUsage;
        }
        out = &file;
    }

    int rc = mfspec::cli::kExitUsage;
    if (spectrum->parsed()) {
        rc = mfspec::cli::cmd_spectrum(cfg, *out, std::cerr);
    } else if (solve->parsed()) {
        rc = mfspec::cli::cmd_solve(cfg, *out, std::cerr);
    } else if (verify->parsed()) {
        rc = mfspec::cli::cmd_verify(cfg, *out, std::cerr);
    } else if (plot->parsed()) {
        rc = mfspec::cli::cmd_plot(cfg, *out, std::cerr);
    }
    if (out == &file) {
        file.flush();
        if (!file) {
            std::cerr << "error: failed writing output file\n";
            return mfspec::cli::kExitUsage;
        }
    }
    return rc;
}
