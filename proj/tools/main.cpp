// Command-line front end: correlation detection on named families or
// user-supplied joint states, alpha scans, entanglement-of-formation curves,
// figure data export, and the robustness check.
//
// Exit codes
//   detect:     0 consistent-with-product, 1 correlated, 2 degenerate
//   robustness: 0 feasible, 1 infeasible
//   all:        3 usage/input error, 4 internal error

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrwit/detection.hpp"
#include "corrwit/entanglement.hpp"
#include "corrwit/matrix_io.hpp"
#include "corrwit/robustness.hpp"
#include "corrwit/states.hpp"

namespace {

using namespace corrwit;

constexpr double kPi = std::numbers::pi;

constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double value, int precision = 12) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string fmt_bloch(const BlochVector& v) {
    return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")";
}

void print_matrix(std::ostream& out, const std::string& label, const ComplexMatrix& m) {
    // Snap display-only rounding noise to zero.
    const auto snap = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
    out << label << ":\n";
    for (int i = 0; i < m.dim(); ++i) {
        out << "  [";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ", ";
            out << fmt(snap(m(i, j).real()), 10);
            const double im = snap(m(i, j).imag());
            out << (im < 0 ? "-" : "+") << fmt(std::abs(im), 10) << "i";
        }
        out << "]\n";
    }
}

// Either a named family or a joint state loaded from a matrix file.
struct Input {
    std::optional<StateFamily> family;
    std::string file;
    std::string label;

    DensityMatrix joint() const {
        if (family) return build_state(*family);
        return DensityMatrix(read_matrix_file(file));
    }
};

struct CommonOpts {
    std::string family_name;
    std::string file;
    double p = -1.0;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::string alpha_frac;
    std::string grid;
    double tol = -1.0;
    std::string out;
};

void add_state_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--family", opts.family_name,
                    "analytic family: max-entangled | pure-mixed | werner-like");
    cmd->add_option("--file", opts.file, "joint 4x4 state from a matrix JSON file");
    cmd->add_option("--p", opts.p, "mixing weight for pure-mixed / werner-like, in [0,1]");
}

void add_alpha_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--alpha", opts.alpha, "interaction parameter alpha = J t, radians");
    cmd->add_option("--alpha-frac", opts.alpha_frac,
                    "alpha as a rational multiple of pi, e.g. 3/8 for 3pi/8");
}

Input parse_input(const CommonOpts& opts) {
    const bool has_family = !opts.family_name.empty();
    const bool has_file = !opts.file.empty();
    if (has_family == has_file) {
        throw UsageError("exactly one of --family and --file is required");
    }
    Input input;
    if (has_family) {
        const auto kind = family_from_string(opts.family_name);
        if (!kind) throw UsageError("unknown family: " + opts.family_name);
        StateFamily family{*kind, 0.0};
        if (*kind != FamilyKind::MaxEntangled) {
            if (opts.p < 0.0) throw UsageError("--p is required for " + opts.family_name);
            if (opts.p > 1.0) throw UsageError("--p must lie in [0, 1]");
            family.p = opts.p;
        }
        input.family = family;
        input.label = opts.family_name;
        if (*kind != FamilyKind::MaxEntangled) input.label += " p=" + fmt(family.p);
    } else {
        input.file = opts.file;
        input.label = opts.file;
    }
    return input;
}

Alpha parse_alpha(const CommonOpts& opts) {
    const bool has_plain = std::isfinite(opts.alpha);
    const bool has_frac = !opts.alpha_frac.empty();
    if (has_plain == has_frac) {
        throw UsageError("exactly one of --alpha and --alpha-frac is required");
    }
    if (has_plain) return Alpha{opts.alpha};
    const auto slash = opts.alpha_frac.find('/');
    if (slash == std::string::npos) {
        throw UsageError("--alpha-frac expects a/b (meaning a*pi/b), got " + opts.alpha_frac);
    }
    try {
        const double num = std::stod(opts.alpha_frac.substr(0, slash));
        const double den = std::stod(opts.alpha_frac.substr(slash + 1));
        if (den == 0.0) throw UsageError("--alpha-frac denominator must be nonzero");
        return Alpha{num * kPi / den};
    } catch (const std::invalid_argument&) {
        throw UsageError("--alpha-frac expects a/b with numeric a, b, got " + opts.alpha_frac);
    }
}

double parse_grid_value(const std::string& token) {
    if (token == "pi") return kPi;
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad grid value: " + token);
    }
}

std::vector<double> parse_grid(const std::string& text, double def_start, double def_stop,
                               int def_steps) {
    double start = def_start;
    double stop = def_stop;
    int steps = def_steps;
    if (!text.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ':')) parts.push_back(token);
        if (parts.size() != 3) throw UsageError("--grid expects start:stop:steps, got " + text);
        start = parse_grid_value(parts[0]);
        stop = parse_grid_value(parts[1]);
        try {
            steps = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("bad grid step count: " + parts[2]);
        }
    }
    if (steps < 2) throw UsageError("grid needs at least 2 steps");
    std::vector<double> grid(steps);
    for (int k = 0; k < steps; ++k) {
        grid[k] = start + (stop - start) * static_cast<double>(k) / (steps - 1);
    }
    return grid;
}

// Output sink: --out path or stdout. Byte-identical across identical runs.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_detect(const CommonOpts& opts) {
    const Input input = parse_input(opts);
    const Alpha alpha = parse_alpha(opts);
    const double tol = opts.tol > 0.0 ? opts.tol : kFeasibilityTol;

    const DensityMatrix joint = input.joint();
    const DensityMatrix rho_s(partial_trace_env(joint.matrix()));
    const DensityMatrix rho_final = evolve_reduced(joint, alpha);
    const DetectionResult r = detect(joint, alpha, tol);

    Sink sink(opts.out);
    std::ostream& out = sink.stream();
    out << "input: " << input.label << "\n";
    out << "alpha: " << fmt(alpha.value) << " rad (canonical " << fmt(alpha.canonical().value)
        << ")\n";
    print_matrix(out, "rho_S", rho_s.matrix());
    print_matrix(out, "rho_S'", rho_final.matrix());
    out << "verdict: " << to_string(r.verdict) << "\n";
    out << "distance: " << fmt(r.distance) << "\n";
    out << "minimizer: " << fmt_bloch(r.minimizer) << "\n";

    switch (r.verdict) {
        case Verdict::ConsistentWithProduct: return 0;
        case Verdict::Correlated: return 1;
        case Verdict::Degenerate: return 2;
    }
    return kExitInternal;
}

int cmd_scan(const CommonOpts& opts) {
    const Input input = parse_input(opts);
    if (!input.family) throw UsageError("scan works on --family inputs");
    const double tol = opts.tol > 0.0 ? opts.tol : kFeasibilityTol;
    const std::vector<double> grid = parse_grid(opts.grid, 0.0, kPi, 201);
    const auto rows = scan_alpha(*input.family, grid, tol);
    Sink sink(opts.out);
    write_scan_csv(sink.stream(), rows);
    return 0;
}

void write_eof_curve(std::ostream& out, FamilyKind kind, const std::vector<double>& pgrid) {
    out << "p,eof\n";
    for (double p : pgrid) {
        const StateFamily family{kind, std::min(p, 1.0)};
        out << fmt(p) << "," << fmt(entanglement_of_formation(build_state(family))) << "\n";
    }
}

int cmd_eof(const CommonOpts& opts) {
    const bool has_family = !opts.family_name.empty();
    const bool has_file = !opts.file.empty();
    if (has_family == has_file) {
        throw UsageError("exactly one of --family and --file is required");
    }
    Sink sink(opts.out);
    if (has_family) {
        // The curve sweeps p itself, so --p is not consulted here.
        const auto kind = family_from_string(opts.family_name);
        if (!kind) throw UsageError("unknown family: " + opts.family_name);
        if (*kind == FamilyKind::MaxEntangled) {
            throw UsageError("eof curves need a p-family: pure-mixed or werner-like");
        }
        const std::vector<double> pgrid = parse_grid(opts.grid, 0.0, 1.0, 201);
        write_eof_curve(sink.stream(), *kind, pgrid);
        return 0;
    }
    const DensityMatrix joint(read_matrix_file(opts.file));
    sink.stream() << "concurrence: " << fmt(concurrence(joint)) << "\n"
                  << "eof: " << fmt(entanglement_of_formation(joint)) << "\n";
    return 0;
}

void write_z_curve(std::ostream& out, const StateFamily& family,
                   const std::vector<double>& grid) {
    out << "alpha,z\n";
    for (double a : grid) {
        const auto z = z_relation(family, Alpha{a});
        out << fmt(a) << ",";
        if (z) out << fmt(*z);
        out << "\n";
    }
}

void write_z_surface(std::ostream& out, FamilyKind kind, const std::vector<double>& agrid,
                     const std::vector<double>& pgrid) {
    out << "alpha,p,z\n";
    for (double a : agrid) {
        for (double p : pgrid) {
            const auto z = z_relation(StateFamily{kind, std::min(p, 1.0)}, Alpha{a});
            out << fmt(a) << "," << fmt(p) << ",";
            if (z) out << fmt(*z);
            out << "\n";
        }
    }
}

int cmd_figure(int fig, const CommonOpts& opts) {
    Sink sink(opts.out);
    std::ostream& out = sink.stream();
    switch (fig) {
        case 1:
            write_z_curve(out, StateFamily::max_entangled(), parse_grid(opts.grid, 0.0, kPi, 801));
            return 0;
        case 2:
            write_eof_curve(out, FamilyKind::PureMixed, parse_grid(opts.grid, 0.0, 1.0, 201));
            return 0;
        case 3:
            write_eof_curve(out, FamilyKind::WernerLike, parse_grid(opts.grid, 0.0, 1.0, 201));
            return 0;
        case 4:
            write_z_surface(out, FamilyKind::PureMixed, parse_grid(opts.grid, 0.0, kPi, 161),
                            parse_grid("", 0.0, 1.0, 41));
            return 0;
        case 5:
            write_z_surface(out, FamilyKind::WernerLike, parse_grid(opts.grid, 0.0, kPi, 161),
                            parse_grid("", 0.0, 1.0, 41));
            return 0;
        default:
            throw UsageError("unknown figure id " + std::to_string(fig) + " (expected 1..5)");
    }
}

int cmd_robustness(const CommonOpts& opts) {
    const Input input = parse_input(opts);
    const Alpha alpha = parse_alpha(opts);
    const double tol = opts.tol > 0.0 ? opts.tol : kRobustnessTol;

    const DensityMatrix joint = input.joint();
    const DensityMatrix rho_s(partial_trace_env(joint.matrix()));
    const DensityMatrix rho_final = evolve_reduced(joint, alpha);
    const RobustnessResult r = robustness_check(rho_s, rho_final, alpha, tol);

    Sink sink(opts.out);
    std::ostream& out = sink.stream();
    out << "input: " << input.label << "\n";
    out << "alpha: " << fmt(alpha.value) << " rad\n";
    out << "residual: " << fmt(r.residual) << "\n";
    out << "feasible: " << (r.feasible ? "yes" : "no") << "\n";
    out << "best n: " << fmt_bloch(r.best_n) << "\n";
    out << "best m: " << fmt_bloch(r.best_m) << "\n";
    return r.feasible ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"witness for initial qubit-environment correlations under exchange coupling"};
    app.require_subcommand(1);

    CommonOpts opts;
    int fig = 0;

    CLI::App* detect_cmd =
        app.add_subcommand("detect", "decide whether a joint state shows initial correlations");
    add_state_flags(detect_cmd, opts);
    add_alpha_flags(detect_cmd, opts);
    detect_cmd->add_option("--tol", opts.tol, "feasibility tolerance on the witness distance");
    detect_cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");

    CLI::App* scan_cmd = app.add_subcommand("scan", "witness distance over an alpha grid (CSV)");
    add_state_flags(scan_cmd, opts);
    scan_cmd->add_option("--grid", opts.grid, "alpha grid start:stop:steps (stop may be 'pi')");
    scan_cmd->add_option("--tol", opts.tol, "feasibility tolerance on the witness distance");
    scan_cmd->add_option("--out", opts.out, "output CSV path (default stdout)");

    CLI::App* eof_cmd =
        app.add_subcommand("eof", "entanglement of formation: curve over p, or one state");
    add_state_flags(eof_cmd, opts);
    eof_cmd->add_option("--grid", opts.grid, "p grid start:stop:steps");
    eof_cmd->add_option("--out", opts.out, "output path (default stdout)");

    CLI::App* figure_cmd = app.add_subcommand("figure", "reproduce figure data as CSV");
    figure_cmd->add_option("--fig", fig, "figure id 1..5")->required();
    figure_cmd->add_option("--grid", opts.grid, "primary grid start:stop:steps");
    figure_cmd->add_option("--out", opts.out, "output CSV path (default stdout)");

    CLI::App* robust_cmd = app.add_subcommand(
        "robustness", "check whether the state pair is explained by any uncorrelated pair");
    add_state_flags(robust_cmd, opts);
    add_alpha_flags(robust_cmd, opts);
    robust_cmd->add_option("--tol", opts.tol, "feasibility tolerance on the residual");
    robust_cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (detect_cmd->parsed()) return cmd_detect(opts);
        if (scan_cmd->parsed()) return cmd_scan(opts);
        if (eof_cmd->parsed()) return cmd_eof(opts);
        if (figure_cmd->parsed()) return cmd_figure(fig, opts);
        if (robust_cmd->parsed()) return cmd_robustness(opts);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
