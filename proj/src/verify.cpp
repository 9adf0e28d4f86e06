#include "mixedpde/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "mixedpde/hyperbolic.hpp"

namespace mixedpde {

std::vector<double> fd_bvp_oracle(const ProblemSpec& p, std::size_t m) {
    if (m < 16) throw std::invalid_argument("fd_bvp_oracle needs m >= 16");
    if (p.a == p.b) throw DegenerateCoefficientsError("hypothesis a != b violated");
    const double lambda = (p.a + p.b) / (p.a - p.b);
    const double kappa = 2.0 / (p.a - p.b);
    const Expr psi_prime = p.psi.derivative();
    const double h = 1.0 / static_cast<double>(m);
    const double tau0 = p.phi0.evaluate(0.0);
    const double tau1 = p.phi1.evaluate(0.0);

    // unknowns tau_1 .. tau_{m-1}, rows scaled by h^2
    const std::size_t n = m - 1;
    const double lo = 1.0 + 0.5 * lambda * h;
    const double up = 1.0 - 0.5 * lambda * h;
    std::vector<double> lower(n, lo), diag(n, -2.0), upper(n, up), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * h;
        rhs[i] = -h * h * kappa * psi_prime.evaluate(x);
    }
    rhs.front() -= lo * tau0;
    rhs.back() -= up * tau1;
    const std::vector<double> inner = solve_tridiagonal(lower, diag, upper, rhs);

    std::vector<double> tau(m + 1);
    tau.front() = tau0;
    tau.back() = tau1;
    std::copy(inner.begin(), inner.end(), tau.begin() + 1);
    return tau;
}

namespace {

template <typename F>
auto at_point(double x, double y, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        char buf[96];
        std::snprintf(buf, sizeof buf, " (at grid point x=%.17g, y=%.17g)", x, y);
        throw EvaluationError(e.what() + std::string(buf));
    }
}

double lerp(double a, double b, std::size_t i, std::size_t n) {
    if (n <= 1) return a;
    return a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// interior x nodes (i+1)/(nx+1)
std::vector<double> interior_x(std::size_t nx) {
    std::vector<double> xs(nx);
    for (std::size_t i = 0; i < nx; ++i) xs[i] = static_cast<double>(i + 1) / static_cast<double>(nx + 1);
    return xs;
}

double parabolic_residual_sup(const ParabolicSolution& sol, const GridConfig& g) {
    const std::vector<double> xs = interior_x(g.nx);
    std::vector<double> stencil_x;
    stencil_x.reserve(3 * xs.size());
    for (double x : xs) {
        stencil_x.push_back(x - g.h_x);
        stencil_x.push_back(x);
        stencil_x.push_back(x + g.h_x);
    }
    double sup = 0.0;
    for (std::size_t j = 0; j < g.ny; ++j) {
        const double y = lerp(g.parabolic_y_lo, 1.0 - g.parabolic_y_lo, j, g.ny);
        const auto mid = at_point(xs.front(), y, [&] { return sol.evaluate_row(y, stencil_x); });
        const auto up = at_point(xs.front(), y + g.h_y_parabolic, [&] { return sol.evaluate_row(y + g.h_y_parabolic, xs); });
        const auto down = at_point(xs.front(), y - g.h_y_parabolic, [&] { return sol.evaluate_row(y - g.h_y_parabolic, xs); });
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double uxx = (mid[3 * i] - 2.0 * mid[3 * i + 1] + mid[3 * i + 2]) / (g.h_x * g.h_x);
            const double uy = (up[i] - down[i]) / (2.0 * g.h_y_parabolic);
            sup = std::max(sup, std::abs(uxx - uy));
        }
    }
    return sup;
}

// Interior points of the triangle whose stencils stay inside it.
template <typename F>
void for_each_hyperbolic_point(const GridConfig& g, double margin, F&& f) {
    for (std::size_t j = 0; j < g.ny; ++j) {
        const double y = -lerp(margin, 0.5 - 1.5 * margin, j, g.ny);
        const double x_lo = -y + margin;
        const double x_hi = 1.0 + y - margin;
        for (std::size_t i = 0; i < g.nx; ++i) {
            const double x = x_lo + (x_hi - x_lo) * static_cast<double>(i + 1) / static_cast<double>(g.nx + 1);
            f(x, y);
        }
    }
}

double hyperbolic_residual_sup(const InterfaceData& d, const GridConfig& g) {
    const double h = g.h_hyperbolic;
    double sup = 0.0;
    for_each_hyperbolic_point(g, 2.0 * h, [&](double x, double y) {
        at_point(x, y, [&] {
            const double u = eval_hyperbolic(d, x, y);
            const double uxx = (eval_hyperbolic(d, x + h, y) - 2.0 * u + eval_hyperbolic(d, x - h, y)) / (h * h);
            const double uyy = (eval_hyperbolic(d, x, y + h) - 2.0 * u + eval_hyperbolic(d, x, y - h)) / (h * h);
            sup = std::max(sup, std::abs(uyy - uxx));
            return 0;
        });
    });
    return sup;
}

double homogeneous_sup(const ProblemSpec& p, const InterfaceData& d, const SeriesConfig& cfg, const GridConfig& g) {
    const ProblemSpec zero = ProblemSpec::homogeneous(p.a, p.b);
    QuadratureConfig quad;
    try {
        QuadratureConfig same;
        same.nodes = d.grid().n;
        check_quadrature_config(same);
        quad = same;
    } catch (const std::invalid_argument&) {
    }
    const InterfaceData dz = solve_interface(zero, quad);
    const ParabolicSolution sol(zero, dz, cfg);
    const std::vector<double> xs = interior_x(g.nx);
    double sup = 0.0;
    for (std::size_t j = 0; j < g.ny; ++j) {
        const double y = lerp(g.y_min, 1.0, j, g.ny);
        for (double u : at_point(xs.front(), y, [&] { return sol.evaluate_row(y, xs); })) sup = std::max(sup, std::abs(u));
    }
    for_each_hyperbolic_point(g, 0.0, [&](double x, double y) {
        sup = std::max(sup, std::abs(at_point(x, y, [&] { return eval_hyperbolic(dz, x, y); })));
    });
    return sup;
}

}  // namespace

double gluing_defect(const ProblemSpec& p, const InterfaceData& d, std::size_t points) {
    double sup = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lerp(0.0, 1.0, i, points);
        const double lhs = at_point(x, 0.0, [&] {
            return p.a * eval_hyperbolic(d, 0.5 * x, -0.5 * x) + p.b * eval_hyperbolic(d, 0.5 * (x + 1.0), 0.5 * (x - 1.0));
        });
        sup = std::max(sup, std::abs(lhs - p.psi.evaluate(x)));
    }
    return sup;
}

VerificationReport verify_solution(const ProblemSpec& p, const InterfaceData& d, const SeriesConfig& cfg,
                                   const GridConfig& grids) {
    VerificationReport r;
    r.grids = grids;
    SeriesConfig series = cfg;
    series.y_min = std::min(series.y_min, grids.y_min);
    const ParabolicSolution sol(p, d, series);

    r.residual_parabolic_sup = parabolic_residual_sup(sol, grids);
    r.residual_hyperbolic_sup = hyperbolic_residual_sup(d, grids);

    {
        std::vector<double> xs(grids.nx);
        for (std::size_t i = 0; i < grids.nx; ++i) xs[i] = lerp(0.1, 0.9, i, grids.nx);
        const auto above = at_point(xs.front(), grids.y_min, [&] { return sol.evaluate_row(grids.y_min, xs); });
        double sup = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double tau = d.tau(xs[i]);
            const double below = at_point(xs[i], -grids.delta, [&] { return eval_hyperbolic(d, xs[i], -grids.delta); });
            sup = std::max({sup, std::abs(above[i] - tau), std::abs(below - tau)});
        }
        r.interface_defect_sup = sup;
    }

    r.gluing_defect_sup = gluing_defect(p, d, grids.gluing_points);

    {
        double sup = 0.0;
        const double walls[2] = {grids.wall_delta, 1.0 - grids.wall_delta};
        for (std::size_t j = 0; j < grids.ny; ++j) {
            const double y = lerp(0.1, 0.9, j, grids.ny);
            const auto u = at_point(walls[0], y, [&] { return sol.evaluate_row(y, walls); });
            sup = std::max({sup, std::abs(u[0] - p.phi0.evaluate(y)), std::abs(u[1] - p.phi1.evaluate(y))});
        }
        r.boundary_defect_sup = sup;
    }

    {
        const std::vector<double> oracle = fd_bvp_oracle(p, grids.oracle_m);
        double sup = 0.0;
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            const double x = static_cast<double>(i) / static_cast<double>(grids.oracle_m);
            sup = std::max(sup, std::abs(oracle[i] - d.tau(x)));
        }
        r.tau_oracle_defect_sup = sup;
    }

    if (grids.check_homogeneous) r.homogeneous_sup = homogeneous_sup(p, d, series, grids);

    const Tolerances& t = grids.tol;
    r.passed = r.residual_parabolic_sup <= t.residual_parabolic && r.residual_hyperbolic_sup <= t.residual_hyperbolic &&
               r.interface_defect_sup <= t.interface && r.gluing_defect_sup <= t.gluing &&
               r.boundary_defect_sup <= t.boundary && r.tau_oracle_defect_sup <= t.tau_oracle &&
               (!r.homogeneous_sup || *r.homogeneous_sup <= t.homogeneous);
    return r;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["residual_parabolic_sup"] = residual_parabolic_sup;
    doc["residual_hyperbolic_sup"] = residual_hyperbolic_sup;
    doc["interface_defect_sup"] = interface_defect_sup;
    doc["gluing_defect_sup"] = gluing_defect_sup;
    doc["boundary_defect_sup"] = boundary_defect_sup;
    doc["tau_oracle_defect_sup"] = tau_oracle_defect_sup;
    doc["homogeneous_sup"] = homogeneous_sup ? nlohmann::ordered_json(*homogeneous_sup) : nlohmann::ordered_json();
    doc["passed"] = passed;
    const Tolerances& t = grids.tol;
    doc["tolerances"] = {
        {"residual_parabolic", t.residual_parabolic}, {"residual_hyperbolic", t.residual_hyperbolic},
        {"interface", t.interface},                   {"gluing", t.gluing},
        {"boundary", t.boundary},                     {"tau_oracle", t.tau_oracle},
        {"homogeneous", t.homogeneous},
    };
    doc["grids"] = {
        {"nx", grids.nx},
        {"ny", grids.ny},
        {"y_min", grids.y_min},
        {"delta", grids.delta},
        {"wall_delta", grids.wall_delta},
        {"parabolic_y_lo", grids.parabolic_y_lo},
        {"h_x", grids.h_x},
        {"h_y_parabolic", grids.h_y_parabolic},
        {"h_hyperbolic", grids.h_hyperbolic},
        {"gluing_points", grids.gluing_points},
        {"oracle_m", grids.oracle_m},
    };
    return doc.dump(2) + "\n";
}

}  // namespace mixedpde
