#include "mixedpde/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace mixedpde {

namespace {

std::string with_value(const std::string& what, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, " (achieved %.3e)", v);
    return what + buf;
}

}  // namespace

AccuracyError::AccuracyError(const std::string& what, double achieved)
    : std::runtime_error(with_value(what, achieved)), achieved_(achieved) {}

void check_quadrature_config(const QuadratureConfig& cfg) {
    const std::size_t intervals = cfg.nodes - 1;
    if (cfg.nodes < 5 || (intervals & (intervals - 1)) != 0)
        throw std::invalid_argument("quadrature node count must be 2^k + 1 with k >= 2");
}

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    std::vector<double> F(n, 0.0);
    if (n < 2) return F;
    if (n == 2) {
        F[1] = 0.5 * h * (f[0] + f[1]);
        return F;
    }
    for (std::size_t i = 2; i < n; i += 2) F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 1 < n) {
            F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        } else {
            // last node of an even-length array: backward panel
            F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i - 1] - f[i - 2]);
        }
    }
    return F;
}

double simpson(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson needs an odd number (>= 3) of samples");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 ? odd : even) += f[i];
    return h / 3.0 * (f[0] + f[n - 1] + 4.0 * odd + 2.0 * even);
}

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre needs n >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nn + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = nn * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged root
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double kk = static_cast<double>(k);
            const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = nn * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

double hermite_eval(const UniformGrid& grid, std::span<const double> values, std::span<const double> slopes,
                    double x) {
    if (x <= 0.0) return values.front();
    if (x >= 1.0) return values.back();
    std::size_t i = static_cast<std::size_t>(x / grid.h);
    if (i >= grid.n - 1) i = grid.n - 2;
    const double x0 = grid.node(i);
    const double t = (x - x0) / grid.h;
    if (t == 0.0) return values[i];
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * values[i] + h10 * grid.h * slopes[i] + h01 * values[i + 1] + h11 * grid.h * slopes[i + 1];
}

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    std::vector<double> c(n, 0.0), d(n, 0.0), x(n, 0.0);
    if (n == 0) return x;
    if (diag[0] == 0.0) throw std::runtime_error("singular tridiagonal system (zero pivot at row 0)");
    c[0] = n > 1 ? upper[0] / diag[0] : 0.0;
    d[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = diag[i] - lower[i] * c[i - 1];
        if (m == 0.0) throw std::runtime_error("singular tridiagonal system (zero pivot at row " + std::to_string(i) + ")");
        c[i] = i + 1 < n ? upper[i] / m : 0.0;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

}  // namespace mixedpde
