#include "mixedpde/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixedpde/hyperbolic.hpp"
#include "mixedpde/interface_solver.hpp"
#include "mixedpde/output.hpp"
#include "mixedpde/parabolic.hpp"
#include "mixedpde/problem.hpp"
#include "mixedpde/verify.hpp"

namespace mixedpde::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << bytes;
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Common {
    std::string problem_path;
    bool force = false;
};

struct SeriesOptions {
    std::size_t n_terms = 100;
    std::string series = "lifted";

    SeriesConfig config() const {
        SeriesConfig cfg;
        cfg.n_cap = n_terms;
        cfg.mode = series == "truncated" ? SeriesMode::Truncated : SeriesMode::Lifted;
        return cfg;
    }
};

struct GridOptions {
    std::size_t nx = 101;
    std::size_t ny_top = 51;
    std::size_t ny_bot = 50;

    EvalGridSpec spec() const {
        EvalGridSpec s;
        s.nx = nx;
        s.ny_top = ny_top;
        s.ny_bot = ny_bot;
        return s;
    }
};

ProblemSpec load_validated(const Common& c, std::ostream& err) {
    ProblemSpec p = ProblemSpec::from_json(read_file(c.problem_path));
    const ValidationReport report = validate(p);
    if (!report.ok && c.force && report.a_ne_b && report.nondegenerate) {
        for (const auto& m : report.messages) err << "warning: " << m << " (continuing under --force)\n";
    }
    require_valid(report, c.force);
    return p;
}

void add_series_options(CLI::App* cmd, SeriesOptions& s) {
    cmd->add_option("--n-terms", s.n_terms, "Cap on sine-series terms")->check(CLI::Range(1, 204));
    cmd->add_option("--series", s.series, "Series form: lifted (default) or truncated")
        ->check(CLI::IsMember({"lifted", "truncated"}));
}

void add_grid_options(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--nx", g.nx, "x nodes on [0,1]")->check(CLI::Range(2, 100000));
    cmd->add_option("--ny-top", g.ny_top, "rows from y=1 down to y_min")->check(CLI::Range(2, 100000));
    cmd->add_option("--ny-bot", g.ny_bot, "rows below the interface down to y=-1/2")->check(CLI::Range(1, 100000));
}

int cmd_solve(const Common& c, std::size_t samples, std::ostream& out, std::ostream& err) {
    const ProblemSpec p = load_validated(c, err);
    const ValidationReport report = validate(p);
    const InterfaceData d = solve_interface(p);
    std::string text;
    text += "# lambda=" + g17(d.lambda()) + "\n";
    text += "# tau0=" + g17(d.tau0()) + "\n";
    text += "# tau1=" + g17(d.tau1()) + "\n";
    text += "# compatibility_defect=" + g17(report.compatibility_defect) + "\n";
    text += "x,tau,tau_prime,nu,nu_antider\n";
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
        text += g17(x) + "," + g17(d.tau(x)) + "," + g17(d.tau_prime(x)) + "," + g17(d.nu(x)) + "," +
                g17(d.nu_antider(x)) + "\n";
    }
    out << text;
    return kOk;
}

int cmd_eval(const Common& c, const SeriesOptions& s, const GridOptions& g, const std::string& output,
             std::ostream& out, std::ostream& err) {
    const ProblemSpec p = load_validated(c, err);
    const InterfaceData d = solve_interface(p);
    const std::vector<GridSample> grid = sample_grid(p, d, s.config(), g.spec());
    write_output(output, emit_csv(grid), out);
    return kOk;
}

int cmd_verify(const Common& c, const SeriesOptions& s, std::ostream& out, std::ostream& err) {
    const ProblemSpec p = load_validated(c, err);
    const InterfaceData d = solve_interface(p);
    const VerificationReport report = verify_solution(p, d, s.config());
    out << report.to_json();
    if (!report.passed) err << "verification failed\n";
    return report.passed ? kOk : kValidationFailure;
}

int cmd_render(const Common& c, const SeriesOptions& s, const GridOptions& g, const std::string& output,
               const std::string& title, std::ostream& out, std::ostream& err) {
    const ProblemSpec p = load_validated(c, err);
    const InterfaceData d = solve_interface(p);
    const std::vector<GridSample> grid = sample_grid(p, d, s.config(), g.spec());
    SvgOptions opts;
    opts.title = title;
    write_output(output, render_svg(grid, opts), out);
    return kOk;
}

int cmd_example(bool force, const std::string& output, std::ostream& out, std::ostream& err) {
    const ProblemSpec p = ProblemSpec::worked_example();
    const ValidationReport report = validate(p);
    err << "example: a=2, b=-1, phi0=1-y, phi1=y, psi=x\n";
    err << "compatibility defect " << g17(report.compatibility_defect) << "\n";
    if (!force) {
        require_valid(report, false);
    }
    const InterfaceData d = solve_interface(p);
    err << "lambda=" << g17(d.lambda()) << " tau(0.5)=" << g17(d.tau(0.5)) << " nu(0)=" << g17(d.nu(0.0))
        << " u(0.5,-0.5)=" << g17(eval_hyperbolic(d, 0.5, -0.5)) << "\n";
    write_output(output, p.to_json(), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solver and verifier for the mixed heat/wave boundary value problem", "mixedpde"};
    app.require_subcommand(1);

    Common common;
    SeriesOptions series;
    GridOptions grid;
    std::string output;
    std::string title;
    std::size_t samples = 11;

    auto* solve = app.add_subcommand("solve", "Solve for the interface traces; prints tau/nu samples as CSV");
    solve->add_option("problem", common.problem_path, "Problem JSON file")->required();
    solve->add_flag("--force", common.force, "Continue when the compatibility condition fails");
    solve->add_option("--samples", samples, "Number of sample points")->check(CLI::Range(1, 1000000));

    auto* eval = app.add_subcommand("eval", "Evaluate u on a grid over the closed domain; CSV output");
    eval->add_option("problem", common.problem_path, "Problem JSON file")->required();
    eval->add_flag("--force", common.force, "Continue when the compatibility condition fails");
    eval->add_option("-o,--output", output, "Output file (default stdout)");
    add_grid_options(eval, grid);
    add_series_options(eval, series);

    auto* verify = app.add_subcommand("verify", "Verify a solution; JSON report, exit 0 iff passed");
    verify->add_option("problem", common.problem_path, "Problem JSON file")->required();
    verify->add_flag("--force", common.force, "Continue when the compatibility condition fails");
    add_series_options(verify, series);

    auto* render = app.add_subcommand("render", "Render an SVG heatmap of u");
    render->add_option("problem", common.problem_path, "Problem JSON file")->required();
    render->add_flag("--force", common.force, "Continue when the compatibility condition fails");
    render->add_option("-o,--output", output, "Output SVG file")->required();
    render->add_option("--title", title, "Figure title");
    add_grid_options(render, grid);
    add_series_options(render, series);

    auto* example = app.add_subcommand("example", "Solve the built-in worked example and print its problem file");
    example->add_flag("--force", common.force, "Accept the example's compatibility defect");
    example->add_option("-o,--output", output, "Write the problem file here (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        if (*solve) return cmd_solve(common, samples, out, err);
        if (*eval) return cmd_eval(common, series, grid, output, out, err);
        if (*verify) return cmd_verify(common, series, out, err);
        if (*render) return cmd_render(common, series, grid, output, title, out, err);
        if (*example) return cmd_example(common.force, output, out, err);
    } catch (const ValidationError& e) {
        err << "validation failed: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const DegenerateCoefficientsError& e) {
        err << "validation failed: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ProblemFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kAccuracyError;
    }
    return kUsageError;
}

}  // namespace mixedpde::cli
