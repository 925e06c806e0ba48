#include "mfspec/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace mfspec::cli {

using nlohmann::json;

std::string format_number(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_fixed(double v, int precision) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

std::string format_label(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view tok) {
    double v{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw OutOfRange("not a number: '" + std::string(tok) + "'");
    return v;
}

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

IfsParams make_params(const RunConfig& cfg) {
    return validate_params(cfg.lambda0, cfg.lambda1);
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw OutOfRange("alpha grid is empty");
    double prev = -1.0;
    for (double a : grid) {
        if (!(a >= 0.0 && a <= 1.0))
            throw OutOfRange("alpha values must lie in [0, 1]");
        if (!(a > prev)) throw OutOfRange("alpha grid must be strictly increasing");
        prev = a;
    }
}

json point_to_json(const SpectrumPoint& pt) {
    return json{{"alpha", pt.alpha},         {"p", pt.p},
                {"q", pt.q},                 {"dimension", pt.dimension},
                {"residual_f", pt.residual_f}, {"formula_spread", pt.formula_spread}};
}

json report_to_json(const VerificationReport& r) {
    return json{{"name", r.name},         {"target", r.target},
                {"estimate", r.estimate}, {"tolerance", r.tolerance},
                {"n_used", r.n_used},     {"seeds_used", r.seeds_used},
                {"passed", r.passed},     {"skipped", r.skipped},
                {"details", r.details}};
}

void write_point_csv(std::ostream& out, const SpectrumPoint& pt) {
    out << format_number(pt.alpha) << ',' << format_number(pt.p) << ','
        << format_number(pt.q) << ',' << format_number(pt.dimension) << ','
        << format_number(pt.residual_f) << ',' << format_number(pt.formula_spread);
}

std::string render_spectrum_svg(const IfsParams& params,
                                const std::vector<SweepEntry>& rows) {
    const double attr = attractor_dimension(params);
    const double bern_alpha = bernoulli_alpha(params);
    const double width = 720.0, height = 480.0;
    const double ml = 70.0, mr = 24.0, mt = 24.0, mb = 56.0;
    auto x_at = [&](double a) { return ml + a * (width - ml - mr); };
    auto y_at = [&](double d) {
        return (height - mb) - (d / attr) * (height - mb - mt);
    };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"720\" height=\"480\" viewBox=\"0 0 720 480\">\n"
      << "  <style>\n"
         "    .axis { stroke: #333333; stroke-width: 1; }\n"
         "    .grid { stroke: #dddddd; stroke-width: 1; }\n"
         "    .curve { fill: none; stroke: #0b62a4; stroke-width: 2; }\n"
         "    .ref { stroke: #a40b0b; stroke-width: 1; stroke-dasharray: 6 4; }\n"
         "    .dot { fill: #a40b0b; }\n"
         "    text { font-family: sans-serif; font-size: 12px; fill: #222222; }\n"
         "  </style>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" fill=\"#ffffff\"/>\n";

    // axes
    s << "  <line class=\"axis\" x1=\"" << format_fixed(ml, 2) << "\" y1=\""
      << format_fixed(height - mb, 2) << "\" x2=\"" << format_fixed(width - mr, 2)
      << "\" y2=\"" << format_fixed(height - mb, 2) << "\"/>\n";
    s << "  <line class=\"axis\" x1=\"" << format_fixed(ml, 2) << "\" y1=\""
      << format_fixed(mt, 2) << "\" x2=\"" << format_fixed(ml, 2) << "\" y2=\""
      << format_fixed(height - mb, 2) << "\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double a = 0.25 * i;
        const double x = x_at(a);
        s << "  <line class=\"axis\" x1=\"" << format_fixed(x, 2) << "\" y1=\""
          << format_fixed(height - mb, 2) << "\" x2=\"" << format_fixed(x, 2)
          << "\" y2=\"" << format_fixed(height - mb + 5, 2) << "\"/>\n";
        s << "  <text x=\"" << format_fixed(x - 10, 2) << "\" y=\""
          << format_fixed(height - mb + 20, 2) << "\">" << format_label(a)
          << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double d = attr * i / 4.0;
        const double y = y_at(d);
        s << "  <line class=\"grid\" x1=\"" << format_fixed(ml, 2) << "\" y1=\""
          << format_fixed(y, 2) << "\" x2=\"" << format_fixed(width - mr, 2)
          << "\" y2=\"" << format_fixed(y, 2) << "\"/>\n";
        s << "  <text x=\"" << format_fixed(ml - 52, 2) << "\" y=\""
          << format_fixed(y + 4, 2) << "\">" << format_label(d) << "</text>\n";
    }
    s << "  <text x=\"" << format_fixed((ml + width - mr) / 2 - 15, 2) << "\" y=\""
      << format_fixed(height - 12, 2) << "\">alpha</text>\n";
    s << "  <text x=\"16\" y=\"" << format_fixed((mt + height - mb) / 2, 2)
      << "\" transform=\"rotate(-90 16 "
      << format_fixed((mt + height - mb) / 2, 2) << ")\">dimension</text>\n";

    // attractor-dimension reference line and the Bernoulli touch point
    s << "  <line class=\"ref\" x1=\"" << format_fixed(ml, 2) << "\" y1=\""
      << format_fixed(y_at(attr), 2) << "\" x2=\"" << format_fixed(width - mr, 2)
      << "\" y2=\"" << format_fixed(y_at(attr), 2) << "\"/>\n";

    s << "  <polyline class=\"curve\" points=\"";
    bool first = true;
    for (const SweepEntry& row : rows) {
        if (!row.point) continue;
        if (!first) s << ' ';
        first = false;
        s << format_fixed(x_at(row.alpha), 2) << ','
          << format_fixed(y_at(row.point->dimension), 2);
    }
    s << "\"/>\n";

    s << "  <circle class=\"dot\" cx=\"" << format_fixed(x_at(bern_alpha), 2)
      << "\" cy=\"" << format_fixed(y_at(attr), 2) << "\" r=\"4\"/>\n";
    s << "  <text x=\"" << format_fixed(x_at(bern_alpha) + 8, 2) << "\" y=\""
      << format_fixed(y_at(attr) - 6, 2) << "\">alpha=" << format_label(bern_alpha)
      << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace

std::vector<double> parse_alpha_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::string token;
        std::istringstream is(text);
        while (std::getline(is, token, ':')) parts.push_back(token);
        if (parts.size() != 3)
            throw OutOfRange("range spec must be start:stop:step");
        const double a = parse_double(parts[0]);
        const double b = parse_double(parts[1]);
        const double step = parse_double(parts[2]);
        if (!(step > 0.0)) throw OutOfRange("range step must be positive");
        if (b < a) throw OutOfRange("range stop must not precede start");
        const double span = b - a;
        const long long exact = std::llround(span / step);
        const bool divides =
            std::abs(a + static_cast<double>(exact) * step - b) <= 1e-12;
        for (long long k = 0;; ++k) {
            if (k > 100000) throw OutOfRange("alpha grid larger than 1e5 points");
            if (divides && k == exact) {
                out.push_back(b);
                break;
            }
            const double v = a + static_cast<double>(k) * step;
            if (v > b + 1e-12) break;
            out.push_back(v);
        }
        return out;
    }
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) out.push_back(parse_double(token));
    if (out.empty()) throw OutOfRange("alpha grid is empty");
    return out;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const IfsParams params = make_params(cfg);
        check_grid(cfg.alpha_grid);
        if (cfg.format == OutputFormat::svg) {
            err << "error: spectrum emits csv or json; use the plot command for svg\n";
            return kExitUsage;
        }
        const SolverConfig scfg{cfg.tolerance, 200};
        const auto rows = spectrum_sweep(params, cfg.alpha_grid, scfg);

        if (cfg.format == OutputFormat::csv) {
            out << "alpha,p,q,dimension,residual_f,formula_spread\n";
            for (const SweepEntry& row : rows) {
                if (row.point) {
                    write_point_csv(out, *row.point);
                } else {
                    out << format_number(row.alpha) << ",,,,,,"
                        << csv_safe(row.error);
                }
                out << '\n';
            }
        } else {
            json arr = json::array();
            for (const SweepEntry& row : rows) {
                if (row.point) {
                    arr.push_back(point_to_json(*row.point));
                } else {
                    arr.push_back(json{{"alpha", row.alpha}, {"error", row.error}});
                }
            }
            out << arr.dump(2) << '\n';
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const IfsParams params = make_params(cfg);
        if (!cfg.alpha_set) {
            err << "error: solve needs --alpha\n";
            return kExitUsage;
        }
        if (cfg.format == OutputFormat::svg) {
            err << "error: solve emits csv or json\n";
            return kExitUsage;
        }
        const SolverConfig scfg{cfg.tolerance, 200};
        const SpectrumPoint pt = solve_alpha(params, cfg.alpha, scfg);
        const DimensionFormulas formulas = dimension_formulas_at(params, pt);

        if (cfg.format == OutputFormat::csv) {
            out << "alpha,p,q,dimension,residual_f,formula_spread,"
                   "dim_from_lambda0,dim_from_lambda1,dim_from_lambda_diff,"
                   "dim_entropy_lyapunov\n";
            write_point_csv(out, pt);
            auto emit = [&](const std::optional<double>& v) {
                out << ',';
                if (v) out << format_number(*v);
            };
            emit(formulas.from_lambda0);
            emit(formulas.from_lambda1);
            emit(formulas.from_lambda_diff);
            emit(formulas.functional);
            out << '\n';
        } else {
            json obj = point_to_json(pt);
            auto put = [&](const char* key, const std::optional<double>& v) {
                if (v)
                    obj[key] = *v;
                else
                    obj[key] = nullptr;
            };
            put("dim_from_lambda0", formulas.from_lambda0);
            put("dim_from_lambda1", formulas.from_lambda1);
            put("dim_from_lambda_diff", formulas.from_lambda_diff);
            put("dim_entropy_lyapunov", formulas.functional);
            out << obj.dump(2) << '\n';
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const IfsParams params = make_params(cfg);
        const std::uint64_t depth = cfg.depth;
        if (depth < 1024 || (depth & (depth - 1)) != 0) {
            err << "error: --depth must be a power of two, at least 1024\n";
            return kExitUsage;
        }
        if (cfg.samples < 16) {
            err << "error: --samples must be at least 16\n";
            return kExitUsage;
        }
        if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
            err << "error: --alpha must lie in [0, 1]\n";
            return kExitUsage;
        }

        const SpectrumPoint pt = solve_alpha(params, cfg.alpha, {cfg.tolerance, 200});
        const auto reports =
            run_battery(params, cfg.alpha, {cfg.seed, 0}, depth, cfg.samples);

        bool all_passed = true;
        json rep_arr = json::array();
        for (const VerificationReport& r : reports) {
            rep_arr.push_back(report_to_json(r));
            if (!r.skipped && !r.passed) all_passed = false;
        }
        json doc{{"lambda0", params.lambda0()},
                 {"lambda1", params.lambda1()},
                 {"alpha", cfg.alpha},
                 {"seed", cfg.seed},
                 {"samples", cfg.samples},
                 {"depth", depth},
                 {"point", point_to_json(pt)},
                 {"reports", rep_arr},
                 {"all_passed", all_passed}};
        out << doc.dump(2) << '\n';
        return all_passed ? kExitOk : kExitVerifyFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const IfsParams params = make_params(cfg);
        check_grid(cfg.alpha_grid);
        if (cfg.alpha_grid.size() < 2) {
            err << "error: plot needs at least two alpha values\n";
            return kExitUsage;
        }
        const SolverConfig scfg{cfg.tolerance, 200};
        const auto rows = spectrum_sweep(params, cfg.alpha_grid, scfg);
        out << render_spectrum_svg(params, rows);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace mfspec::cli
