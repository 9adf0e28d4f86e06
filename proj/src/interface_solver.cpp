#include "mixedpde/interface_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mixedpde {

double InterfaceData::checked(double x) const {
    if (!(x >= -eps_geo_ && x <= 1.0 + eps_geo_)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "interface trace evaluated at x = %.17g outside [0, 1]", x);
        throw RangeError(buf);
    }
    return std::clamp(x, 0.0, 1.0);
}

double InterfaceData::tau(double x) const {
    return hermite_eval(grid_, tau_nodes_, tau_prime_nodes_, checked(x));
}

double InterfaceData::tau_prime(double x) const { return tau_prime_fn_(checked(x)); }

double InterfaceData::nu(double x) const { return nu_fn_(checked(x)); }

double InterfaceData::nu_antider(double x) const { return nu_antider_fn_(checked(x)); }

InterfaceData InterfaceData::from_traces(const TraceFunctions& f, std::size_t nodes, double lambda) {
    InterfaceData d;
    d.lambda_ = lambda;
    d.grid_ = UniformGrid(nodes);
    d.tau_nodes_.resize(nodes);
    d.tau_prime_nodes_.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = d.grid_.node(i);
        d.tau_nodes_[i] = f.tau(x);
        d.tau_prime_nodes_[i] = f.tau_prime(x);
    }
    d.tau_prime_fn_ = f.tau_prime;
    d.nu_fn_ = f.nu;
    d.nu_antider_fn_ = f.nu_antider;
    return d;
}

namespace {

struct Construction {
    UniformGrid grid;
    double c = 0.0;
    std::vector<double> H;        // int_0^x e^{-lambda s} g(s) ds
    std::vector<double> H_slope;  // e^{-lambda x} g(x)
    std::vector<double> tau;
    std::vector<double> tau_prime;
};

// E(x) = (e^{lambda x} - 1)/lambda, continuous at lambda = 0
double growth(double lambda, double x) { return lambda == 0.0 ? x : std::expm1(lambda * x) / lambda; }

Construction construct(double lambda, double tau0, double tau1, const std::function<double(double)>& g,
                       std::size_t nodes) {
    Construction k;
    k.grid = UniformGrid(nodes);
    const double h = k.grid.h;
    k.H_slope.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = k.grid.node(i);
        k.H_slope[i] = std::exp(-lambda * x) * g(x);
    }
    k.H = cumulative_simpson(k.H_slope, h);

    std::vector<double> outer_integrand(nodes);
    for (std::size_t i = 0; i < nodes; ++i) outer_integrand[i] = std::exp(lambda * k.grid.node(i)) * k.H[i];
    const std::vector<double> outer = cumulative_simpson(outer_integrand, h);

    k.c = (tau1 - tau0 - outer.back()) / growth(lambda, 1.0);
    k.tau.resize(nodes);
    k.tau_prime.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = k.grid.node(i);
        k.tau[i] = tau0 + k.c * growth(lambda, x) + outer[i];
        k.tau_prime[i] = std::exp(lambda * x) * (k.c + k.H[i]);
    }
    k.tau.front() = tau0;
    k.tau.back() = tau1;
    return k;
}

struct SolvedState {
    double lambda = 0.0;
    double kappa = 0.0;  // 2/(a-b)
    double c = 0.0;
    double tau0 = 0.0;
    double psi0 = 0.0;
    UniformGrid grid;
    std::vector<double> H;
    std::vector<double> H_slope;
    Expr psi = Expr::constant(0.0);
    Expr psi_prime = Expr::constant(0.0);
};

}  // namespace

InterfaceData solve_interface(const ProblemSpec& p, const QuadratureConfig& cfg) {
    check_quadrature_config(cfg);
    if (p.a == p.b)
        throw DegenerateCoefficientsError("hypothesis a != b violated: nu = ((a+b) tau' - 2 psi')/(a-b) is undefined");

    auto state = std::make_shared<SolvedState>();
    state->lambda = (p.a + p.b) / (p.a - p.b);
    state->kappa = 2.0 / (p.a - p.b);
    state->psi = p.psi;
    state->psi_prime = p.psi.derivative();
    state->psi0 = p.psi.evaluate(0.0);

    const double tau0 = p.phi0.evaluate(0.0);
    const double tau1 = p.phi1.evaluate(0.0);
    state->tau0 = tau0;

    const Expr psi_prime = state->psi_prime;
    const double kappa = state->kappa;
    const auto g = [&](double x) { return -kappa * psi_prime.evaluate(x); };

    Construction fine = construct(state->lambda, tau0, tau1, g, cfg.nodes);
    if (!std::isfinite(fine.c)) throw AccuracyError("interface construction overflowed; |lambda| too large", fine.c);

    if (cfg.richardson_check) {
        const Construction coarse = construct(state->lambda, tau0, tau1, g, (cfg.nodes - 1) / 2 + 1);
        double gap = 0.0;
        for (std::size_t i = 0; i < coarse.grid.n; ++i)
            gap = std::max(gap, std::abs(coarse.tau[i] - fine.tau[2 * i]));
        if (!(gap <= cfg.richardson_tol))
            throw AccuracyError("interface quadrature failed the half-grid consistency check", gap);
    }

    state->c = fine.c;
    state->grid = fine.grid;
    state->H = std::move(fine.H);
    state->H_slope = std::move(fine.H_slope);

    InterfaceData d;
    d.lambda_ = state->lambda;
    d.grid_ = fine.grid;
    d.tau_nodes_ = std::move(fine.tau);
    d.tau_prime_nodes_ = std::move(fine.tau_prime);

    d.tau_prime_fn_ = [state](double x) {
        const double H = hermite_eval(state->grid, state->H, state->H_slope, x);
        return std::exp(state->lambda * x) * (state->c + H);
    };
    auto tau_prime = d.tau_prime_fn_;
    d.nu_fn_ = [state, tau_prime](double x) {
        return state->lambda * tau_prime(x) - state->kappa * state->psi_prime.evaluate(x);
    };
    // N needs tau itself; capture the nodal arrays by value in a shared block
    auto tau_block = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>(d.tau_nodes_,
                                                                                             d.tau_prime_nodes_);
    d.nu_antider_fn_ = [state, tau_block](double x) {
        const double t = hermite_eval(state->grid, tau_block->first, tau_block->second, x);
        return state->lambda * (t - state->tau0) - state->kappa * (state->psi.evaluate(x) - state->psi0);
    };
    return d;
}

}  // namespace mixedpde
