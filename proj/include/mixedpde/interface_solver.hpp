#pragma once

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "mixedpde/problem.hpp"
#include "mixedpde/quadrature.hpp"

namespace mixedpde {

/// a = b: the interface relation nu = lambda tau' - 2/(a-b) psi' is singular.
class DegenerateCoefficientsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation point outside [0, 1] (beyond eps_geo).
class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Callables describing a trace pair directly; used to build InterfaceData
/// from known functions (tests, perturbation studies).
struct TraceFunctions {
    std::function<double(double)> tau;
    std::function<double(double)> tau_prime;
    std::function<double(double)> nu;
    std::function<double(double)> nu_antider;
};

/// The traces of the solution on y = 0: tau(x) = u(x,0), nu(x) = u_y(x,0+),
/// together with tau' and N(x) = int_0^x nu.
///
/// tau is stored on a uniform grid with its slope and interpolated by cubic
/// Hermite; the grid endpoints carry tau(0) and tau(1) exactly. Immutable and
/// safe to share between threads.
class InterfaceData {
public:
    double tau(double x) const;
    double tau_prime(double x) const;
    double nu(double x) const;
    double nu_antider(double x) const;

    double lambda() const noexcept { return lambda_; }
    double tau0() const noexcept { return tau_nodes_.front(); }
    double tau1() const noexcept { return tau_nodes_.back(); }

    const UniformGrid& grid() const noexcept { return grid_; }
    std::span<const double> tau_nodes() const noexcept { return tau_nodes_; }
    std::span<const double> tau_prime_nodes() const noexcept { return tau_prime_nodes_; }

    /// Samples `f.tau` and `f.tau_prime` on `nodes` uniform nodes; nu and N
    /// are evaluated through the given callables. lambda is informational.
    static InterfaceData from_traces(const TraceFunctions& f, std::size_t nodes = 4097, double lambda = 0.0);

private:
    friend InterfaceData solve_interface(const ProblemSpec&, const QuadratureConfig&);

    double checked(double x) const;

    double lambda_ = 0.0;
    double eps_geo_ = kDefaultEpsGeo;
    UniformGrid grid_;
    std::vector<double> tau_nodes_;
    std::vector<double> tau_prime_nodes_;
    std::function<double(double)> tau_prime_fn_;
    std::function<double(double)> nu_fn_;
    std::function<double(double)> nu_antider_fn_;
};

/// Solves tau'' - lambda tau' = g, g = -2/(a-b) psi', tau(0) = phi0(0),
/// tau(1) = phi1(0), lambda = (a+b)/(a-b), with the integrating factor
/// e^{-lambda x}:
///
///   H(x)  = int_0^x e^{-lambda s} g(s) ds
///   tau'  = e^{lambda x} (c + H(x))
///   tau   = tau(0) + c E(x) + int_0^x e^{lambda t} H(t) dt,
///   E(x)  = (e^{lambda x} - 1)/lambda   (E(x) = x for lambda = 0)
///
/// with c fixed by tau(1). The integrals are cumulative Simpson sums on
/// cfg.nodes nodes, checked against the half-resolution grid. nu and N come
/// from nu = lambda tau' + g and N = lambda (tau - tau(0)) - 2/(a-b) (psi - psi(0)),
/// so psi' enters symbolically.
///
/// Does not check the compatibility condition; callers validate first.
InterfaceData solve_interface(const ProblemSpec& p, const QuadratureConfig& cfg = {});

inline double eval_tau(const InterfaceData& d, double x) { return d.tau(x); }
inline double eval_tau_prime(const InterfaceData& d, double x) { return d.tau_prime(x); }
inline double eval_nu(const InterfaceData& d, double x) { return d.nu(x); }
inline double eval_nu_antider(const InterfaceData& d, double x) { return d.nu_antider(x); }

}  // namespace mixedpde
