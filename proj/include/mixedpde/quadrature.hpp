#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mixedpde {

/// A numerical accuracy target could not be met.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved);
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct QuadratureConfig {
    std::size_t nodes = 4097;       // uniform nodes on [0,1]; (nodes - 1) must be a power of two
    double richardson_tol = 1e-9;   // max allowed M vs (M-1)/2+1 discrepancy
    bool richardson_check = true;
};

/// Throws std::invalid_argument unless nodes = 2^k + 1 with k >= 2.
void check_quadrature_config(const QuadratureConfig& cfg);

/// Uniform grid on [0, 1] with n nodes.
struct UniformGrid {
    std::size_t n = 0;
    double h = 0.0;

    explicit UniformGrid(std::size_t nodes = 2) : n(nodes), h(1.0 / static_cast<double>(nodes - 1)) {}
    double node(std::size_t i) const { return i == n - 1 ? 1.0 : static_cast<double>(i) * h; }
};

/// Running integral F_i = int_{x_0}^{x_i} f on a uniform grid with step h.
/// Even nodes use composite Simpson; odd nodes add one 3-point panel
/// h/12 (5 f_{i-1} + 8 f_i - f_{i+1}) to the preceding even node.
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

/// Composite Simpson over an odd number of samples.
double simpson(std::span<const double> f, double h);

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(std::size_t n);

/// Cubic Hermite interpolation on a uniform grid from nodal values and slopes.
/// x is clamped to [0, 1].
double hermite_eval(const UniformGrid& grid, std::span<const double> values, std::span<const double> slopes,
                    double x);

/// Solves a tridiagonal system by forward elimination and back substitution.
/// lower[0] and upper[n-1] are ignored. Throws std::runtime_error on a zero pivot.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace mixedpde
