#include "mixedpde/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace mixedpde {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
// exp(-30) ~ 9e-14: the time-integral window cut-off
constexpr double kWindowExponent = 30.0;

void require_causal(double dt) {
    if (!(dt > 0.0)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "kernel needs a positive time separation, got %.17g", dt);
        throw CausalityError(buf);
    }
}

// (x^3 - x)/6: zero at both walls, second derivative x
double corrector_right(double x) { return (x * x * x - x) / 6.0; }
double corrector_left(double x) { return corrector_right(1.0 - x); }

double alternating(std::size_t n) { return n % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

void check_series_config(const SeriesConfig& cfg) {
    if (!(cfg.eps_tail > 0.0)) throw std::invalid_argument("eps_tail must be positive");
    if (cfg.n_cap == 0) throw std::invalid_argument("n_cap must be at least 1");
    if (!(cfg.y_min > 0.0 && cfg.y_min < 1.0)) throw std::invalid_argument("y_min must lie in (0, 1)");
    if (cfg.quad_nodes == 0) throw std::invalid_argument("quad_nodes must be at least 1");
}

double green_spectral(double x, double y, double xi, double eta, const SeriesConfig& cfg) {
    const double dt = y - eta;
    require_causal(dt);
    const double reach = std::sqrt(-std::log(cfg.eps_tail) / (kPi2 * dt));
    const std::size_t n_last = std::min<std::size_t>(cfg.n_cap, static_cast<std::size_t>(reach) + 1);
    double sum = 0.0;
    for (std::size_t n = 1; n <= n_last; ++n) {
        const double nn = static_cast<double>(n);
        sum += std::sin(kPi * nn * x) * std::sin(kPi * nn * xi) * std::exp(-nn * nn * kPi2 * dt);
    }
    return 2.0 * sum;
}

double green_wall_flux(double x, double y, Wall wall, double t, const SeriesConfig& cfg) {
    const double dt = y - t;
    require_causal(dt);
    // pi n e^{-n^2 pi^2 dt} peaks at n = 1/(pi sqrt(2 dt)); stop past the peak once below eps_tail
    const double peak = 1.0 / (kPi * std::sqrt(2.0 * dt));
    double sum = 0.0;
    for (std::size_t n = 1; n <= cfg.n_cap; ++n) {
        const double nn = static_cast<double>(n);
        const double decay = kPi * nn * std::exp(-nn * nn * kPi2 * dt);
        const double sign = wall == Wall::Left ? 1.0 : alternating(n);
        sum += sign * decay * std::sin(kPi * nn * x);
        if (nn >= peak && decay < cfg.eps_tail) break;
    }
    return 2.0 * sum;
}

double green_images(double x, double y, double xi, double eta, std::size_t k_images) {
    const double dt = y - eta;
    require_causal(dt);
    const double norm = 1.0 / std::sqrt(4.0 * kPi * dt);
    auto phi = [&](double z) { return norm * std::exp(-z * z / (4.0 * dt)); };
    const long K = static_cast<long>(k_images);
    double sum = 0.0;
    for (long k = -K; k <= K; ++k) {
        const double shift = 2.0 * static_cast<double>(k);
        sum += phi(x - xi - shift) - phi(x + xi - shift);
    }
    return sum;
}

std::vector<double> sine_coefficients(std::span<const double> samples, std::size_t n_max) {
    if (n_max == 0) throw std::invalid_argument("n_max must be at least 1");
    const std::size_t m = samples.size();
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("sine_coefficients needs an odd sample count");
    const std::size_t limit = (m - 1) / 20;
    if (n_max > limit) {
        throw std::invalid_argument("n_max = " + std::to_string(n_max) + " exceeds the resolvable limit " +
                                    std::to_string(limit) + " for " + std::to_string(m) + " nodes");
    }
    const UniformGrid grid(m);
    std::vector<double> out(n_max);
    std::vector<double> integrand(m);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double w = kPi * static_cast<double>(n);
        for (std::size_t i = 0; i < m; ++i) integrand[i] = std::sin(w * grid.node(i)) * samples[i];
        out[n - 1] = simpson(integrand, grid.h);
    }
    return out;
}

std::vector<double> sine_coefficients(const InterfaceData& d, std::size_t n_max) {
    return sine_coefficients(d.tau_nodes(), n_max);
}

ParabolicSolution::ParabolicSolution(const ProblemSpec& p, const InterfaceData& d, SeriesConfig cfg)
    : cfg_(cfg),
      phi0_(p.phi0),
      phi1_(p.phi1),
      dphi0_(p.phi0.derivative()),
      dphi1_(p.phi1.derivative()),
      ddphi0_(dphi0_.derivative()),
      ddphi1_(dphi1_.derivative()),
      grid_(d.grid()),
      rule_(gauss_legendre(cfg.quad_nodes)) {
    check_series_config(cfg_);
    forced_ = !(ddphi0_.is_constant(0.0) && ddphi1_.is_constant(0.0));

    const auto tau = d.tau_nodes();
    initial_nodes_.assign(tau.begin(), tau.end());
    if (cfg_.mode == SeriesMode::Lifted) {
        const double p0 = phi0_.evaluate(0.0), p1 = phi1_.evaluate(0.0);
        const double dp0 = dphi0_.evaluate(0.0), dp1 = dphi1_.evaluate(0.0);
        for (std::size_t i = 0; i < grid_.n; ++i) {
            const double x = grid_.node(i);
            initial_nodes_[i] -= p0 * (1.0 - x) + p1 * x + dp0 * corrector_left(x) + dp1 * corrector_right(x);
        }
    }
    coeffs_ = sine_coefficients(initial_nodes_, cfg_.n_cap);
}

std::size_t ParabolicSolution::terms_at(double y) const {
    if (cfg_.mode == SeriesMode::Truncated || forced_) return cfg_.n_cap;
    const double reach = std::sqrt(-std::log(cfg_.eps_tail) / (kPi2 * y));
    return std::min<std::size_t>(cfg_.n_cap, static_cast<std::size_t>(reach) + 1);
}

double ParabolicSolution::windowed_integral(const Expr& f, double k, double y) const {
    if (f.is_constant(0.0)) return 0.0;
    const double lo = std::max(0.0, y - kWindowExponent / k);
    const double half = 0.5 * (y - lo);
    const double mid = 0.5 * (y + lo);
    double sum = 0.0;
    for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
        const double t = mid + half * rule_.nodes[j];
        sum += rule_.weights[j] * std::exp(-k * (y - t)) * f.evaluate(t);
    }
    return half * sum;
}

std::vector<double> ParabolicSolution::amplitudes(double y) const {
    const std::size_t terms = terms_at(y);
    const bool images = y < cfg_.y_min;
    std::vector<double> amp(terms, 0.0);
    for (std::size_t n = 1; n <= terms; ++n) {
        const double nn = static_cast<double>(n);
        const double k = nn * nn * kPi2;
        const double sign = alternating(n);
        const double initial = images ? 0.0 : 2.0 * std::exp(-k * y) * coeffs_[n - 1];
        if (cfg_.mode == SeriesMode::Truncated) {
            const double flux = windowed_integral(phi0_, k, y) - sign * windowed_integral(phi1_, k, y);
            amp[n - 1] = 2.0 * kPi * nn * flux + initial;
        } else {
            const double src = windowed_integral(ddphi0_, k, y) - sign * windowed_integral(ddphi1_, k, y);
            amp[n - 1] = 2.0 / (kPi2 * kPi * nn * nn * nn) * src + initial;
        }
    }
    return amp;
}

double ParabolicSolution::wall_part(double x, double y) const {
    if (cfg_.mode == SeriesMode::Truncated) return 0.0;
    return phi0_.evaluate(y) * (1.0 - x) + phi1_.evaluate(y) * x + dphi0_.evaluate(y) * corrector_left(x) +
           dphi1_.evaluate(y) * corrector_right(x);
}

double ParabolicSolution::image_initial_part(double x, double y) const {
    std::vector<double> integrand(grid_.n);
    for (std::size_t i = 0; i < grid_.n; ++i)
        integrand[i] = green_images(x, y, grid_.node(i), 0.0, cfg_.k_images) * initial_nodes_[i];
    return simpson(integrand, grid_.h);
}

void ParabolicSolution::check_point(double x, double y) const {
    const Region r = classify_point(x, y);
    if (!(r == Region::ParabolicInterior || r == Region::ParabolicBoundary) || y <= 0.0) {
        char buf[112];
        std::snprintf(buf, sizeof buf, "point (%.17g, %.17g) is outside the closed parabolic square", x, y);
        throw RangeError(buf);
    }
    if (y < cfg_.y_min) {
        // the image quadrature needs the Gaussian width sqrt(2y) to span a couple of grid steps
        if (cfg_.small_y_images && y >= 2.0 * grid_.h * grid_.h) return;
        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "y = %.3e is below y_min = %.3e where the spectral series is unreliable; "
                      "enable image-kernel mode or evaluate higher",
                      y, cfg_.y_min);
        throw ReliabilityError(buf);
    }
}

std::vector<double> ParabolicSolution::evaluate_row(double y, std::span<const double> xs) const {
    for (double x : xs) check_point(x, y);
    const std::vector<double> amp = amplitudes(y);
    const bool images = y < cfg_.y_min;
    std::vector<double> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double x = std::clamp(xs[j], 0.0, 1.0);
        double sum = 0.0;
        for (std::size_t n = 1; n <= amp.size(); ++n) sum += amp[n - 1] * std::sin(kPi * static_cast<double>(n) * x);
        if (images) sum += image_initial_part(x, y);
        out[j] = wall_part(x, y) + sum;
    }
    return out;
}

double ParabolicSolution::operator()(double x, double y) const {
    const double xs[1] = {x};
    return evaluate_row(y, xs)[0];
}

double eval_parabolic(const ProblemSpec& p, const InterfaceData& d, double x, double y, const SeriesConfig& cfg) {
    return ParabolicSolution(p, d, cfg)(x, y);
}

}  // namespace mixedpde
