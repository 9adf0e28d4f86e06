#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedpde/interface_solver.hpp"
#include "mixedpde/parabolic.hpp"
#include "mixedpde/problem.hpp"

namespace mixedpde {

/// An evaluator failed during verification; the message names the grid point.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Second-order finite-difference solution of tau'' - lambda tau' = g with the
/// same boundary values as solve_interface, on m+1 uniform nodes. Independent
/// of the quadrature construction and meant as its oracle.
std::vector<double> fd_bvp_oracle(const ProblemSpec& p, std::size_t m);

struct Tolerances {
    double residual_parabolic = 1e-4;
    double residual_hyperbolic = 1e-5;
    double interface = 1e-2;
    double gluing = 1e-8;
    double boundary = 1e-2;
    double tau_oracle = 1e-5;
    double homogeneous = 1e-12;
};

struct GridConfig {
    std::size_t nx = 64;
    std::size_t ny = 64;
    double y_min = 1e-3;           // parabolic side of the interface check
    double delta = 1e-3;           // hyperbolic side of the interface check
    double wall_delta = 1e-3;      // offset of the boundary check from x = 0, 1
    double parabolic_y_lo = 0.05;  // residual grid starts here
    double h_x = 1e-3;             // u_xx step (both subdomains)
    double h_y_parabolic = 1e-4;   // u_y step
    double h_hyperbolic = 1e-3;    // u_yy step
    std::size_t gluing_points = 1001;
    std::size_t oracle_m = 2048;
    bool check_homogeneous = true;
    Tolerances tol;
};

struct VerificationReport {
    double residual_parabolic_sup = 0.0;
    double residual_hyperbolic_sup = 0.0;
    double interface_defect_sup = 0.0;
    double gluing_defect_sup = 0.0;
    double boundary_defect_sup = 0.0;
    double tau_oracle_defect_sup = 0.0;
    std::optional<double> homogeneous_sup;
    bool passed = false;
    GridConfig grids;

    std::string to_json() const;
};

/// Sup of |a u(x/2,-x/2) + b u((x+1)/2,(x-1)/2) - psi(x)| over `points` uniform x in [0,1].
double gluing_defect(const ProblemSpec& p, const InterfaceData& d, std::size_t points = 1001);

/// Checks a solved problem: heat and wave residuals by centred differences,
/// both one-sided limits at the interface against tau, the characteristic
/// condition, the wall data, the FD oracle for tau and, optionally, that the
/// homogeneous problem with the same a, b yields zero.
VerificationReport verify_solution(const ProblemSpec& p, const InterfaceData& d, const SeriesConfig& cfg = {},
                                   const GridConfig& grids = {});

}  // namespace mixedpde
