#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mixedpde/interface_solver.hpp"
#include "mixedpde/problem.hpp"
#include "mixedpde/quadrature.hpp"

namespace mixedpde {

/// Kernel evaluated with a non-positive time separation.
class CausalityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested height is below the reliable range of the spectral series.
class ReliabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeriesMode {
    /// Wall data are lifted out in closed form (phi0 (1-x) + phi1 x plus the
    /// cubic correctors driven by phi0', phi1'); only the remainder, whose
    /// sine coefficients decay at least like n^-3, is summed. Default.
    Lifted,
    /// The Green representation summed term by term to exactly n_cap terms:
    /// wall-flux kernels integrated in time plus the sine coefficients of tau.
    /// Converges like 1/n near the walls; kept to reproduce fixed-N pictures.
    Truncated,
};

enum class Wall { Left = 0, Right = 1 };

struct SeriesConfig {
    double eps_tail = 1e-10;
    std::size_t n_cap = 200;
    double y_min = 1e-3;
    std::size_t quad_nodes = 32;  // Gauss-Legendre nodes per time integral
    SeriesMode mode = SeriesMode::Lifted;
    /// Below y_min, replace the initial-data series by a direct quadrature
    /// against the image-sum kernel instead of refusing.
    bool small_y_images = false;
    std::size_t k_images = 8;
};

/// Throws std::invalid_argument on eps_tail <= 0, n_cap == 0, y_min outside (0,1)
/// or quad_nodes == 0.
void check_series_config(const SeriesConfig& cfg);

/// G(x,y;xi,eta) = 2 sum sin(pi n x) sin(pi n xi) exp(-n^2 pi^2 (y-eta)), summed
/// through the first n with exp(-n^2 pi^2 (y-eta)) < eps_tail (at most n_cap terms).
double green_spectral(double x, double y, double xi, double eta, const SeriesConfig& cfg = {});

/// d/dxi G at the wall: 2 sum pi n sin(pi n x) e^{-n^2 pi^2 (y-t)} for the left
/// wall and 2 sum (-1)^n pi n sin(pi n x) e^{-n^2 pi^2 (y-t)} for the right.
double green_wall_flux(double x, double y, Wall wall, double t, const SeriesConfig& cfg = {});

/// Image-sum form of G: sum_{k=-K..K} [Phi(x-xi-2k) - Phi(x+xi-2k)] with the
/// free-space heat kernel Phi(z,s) = exp(-z^2/(4s))/sqrt(4 pi s).
double green_images(double x, double y, double xi, double eta, std::size_t k_images = 8);

/// c_n = int_0^1 sin(pi n xi) f(xi) d xi, n = 1..n_max, composite Simpson over
/// uniform samples of f on [0,1]. n_max must not exceed (samples - 1)/20.
std::vector<double> sine_coefficients(std::span<const double> samples, std::size_t n_max);

std::vector<double> sine_coefficients(const InterfaceData& d, std::size_t n_max);

/// Heat-side solution assembled from the Green representation. Precomputes
/// the sine coefficients of the initial data once; evaluation is pure.
class ParabolicSolution {
public:
    ParabolicSolution(const ProblemSpec& p, const InterfaceData& d, SeriesConfig cfg = {});

    double operator()(double x, double y) const;

    /// Evaluates a whole row at fixed y; the modal amplitudes are shared.
    std::vector<double> evaluate_row(double y, std::span<const double> xs) const;

    /// Number of sine modes used at height y.
    std::size_t terms_at(double y) const;

    const SeriesConfig& config() const noexcept { return cfg_; }

private:
    void check_point(double x, double y) const;
    std::vector<double> amplitudes(double y) const;
    double windowed_integral(const Expr& f, double k, double y) const;
    double wall_part(double x, double y) const;
    double image_initial_part(double x, double y) const;

    SeriesConfig cfg_;
    Expr phi0_, phi1_;
    Expr dphi0_, dphi1_;
    Expr ddphi0_, ddphi1_;
    bool forced_ = false;  // remainder has a nonzero source (phi'' != 0)
    UniformGrid grid_;
    std::vector<double> initial_nodes_;  // tau (truncated) or tau minus the lift at y = 0
    std::vector<double> coeffs_;         // sine coefficients of initial_nodes_
    GaussLegendreRule rule_;
};

/// Convenience wrapper building a ParabolicSolution for a single point.
double eval_parabolic(const ProblemSpec& p, const InterfaceData& d, double x, double y,
                      const SeriesConfig& cfg = {});

}  // namespace mixedpde
