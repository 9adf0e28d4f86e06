#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mixedpde/parabolic.hpp"
#include "test_support.hpp"

using namespace mixedpde;
using namespace mixedpde::testing;

namespace {

const ProblemSpec& example_problem() {
    static const ProblemSpec p = ProblemSpec::worked_example();
    return p;
}

const InterfaceData& example() {
    static const InterfaceData d = solve_interface(example_problem());
    return d;
}

const ParabolicSolution& lifted() {
    static const ParabolicSolution s(example_problem(), example());
    return s;
}

}  // namespace

TEST(GreenKernels, FrozenValues) {
    // mpmath, full series
    EXPECT_NEAR(green_spectral(0.5, 1.0, 0.5, 0.0), 1.034463724076246e-4, 1e-12);
    EXPECT_NEAR(green_wall_flux(0.5, 0.1, Wall::Left, 0.0), 2.339176537265802, 1e-9);
}

TEST(GreenKernels, SymmetryAndReflection) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng), xi = u(rng), dt = 0.001 + 0.2 * u(rng);
        const double g = green_spectral(x, dt, xi, 0.0);
        EXPECT_NEAR(g, green_spectral(xi, dt, x, 0.0), 1e-12);
        EXPECT_NEAR(g, green_spectral(1 - x, dt, 1 - xi, 0.0), 1e-9);
        // both are d/dxi G at the wall, so the reflection flips the sign
        EXPECT_NEAR(green_wall_flux(x, dt, Wall::Left, 0.0), -green_wall_flux(1 - x, dt, Wall::Right, 0.0), 1e-9);
    }
}

TEST(GreenKernels, ImageSumAgreesWithSpectralSum) {
    for (double dt : {0.01, 0.05, 0.2}) {
        for (double x : {0.1, 0.5, 0.93}) {
            for (double xi : {0.2, 0.5, 0.8}) {
                EXPECT_NEAR(green_images(x, dt, xi, 0.0), green_spectral(x, dt, xi, 0.0), 1e-9) << dt;
            }
        }
    }
}

TEST(GreenKernels, ImageSumHasUnitMassAwayFromWalls) {
    const std::size_t m = 4097;
    const UniformGrid g(m);
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) f[i] = green_images(0.5, 1e-3, g.node(i), 0.0);
    EXPECT_NEAR(simpson(f, g.h), 1.0, 1e-10);
}

TEST(GreenKernels, Causality) {
    EXPECT_THROW(green_spectral(0.5, 0.1, 0.5, 0.1), CausalityError);
    EXPECT_THROW(green_wall_flux(0.5, 0.1, Wall::Right, 0.2), CausalityError);
    EXPECT_THROW(green_images(0.5, 0.0, 0.5, 0.0), CausalityError);
}

TEST(SineCoefficients, MatchClosedFormForExampleTau) {
    const std::vector<double> c = sine_coefficients(example(), 200);
    // Simpson on 4097 nodes: the error grows with the frequency, ~5e-9 at n = 200
    for (int n = 1; n <= 200; ++n) {
        const double tol = std::max(1e-11, 1e-10 * std::pow(n / 50.0, 3));
        EXPECT_NEAR(c[n - 1], example_tau_sine_coefficient(n), tol) << n;
    }
}

TEST(SineCoefficients, ResolutionLimit) {
    std::vector<double> s(201, 1.0);
    EXPECT_NO_THROW(sine_coefficients(s, 10));
    EXPECT_THROW(sine_coefficients(s, 11), std::invalid_argument);
    EXPECT_THROW(sine_coefficients(s, 0), std::invalid_argument);
}

TEST(Parabolic, SingleEigenmodeDecays) {
    const InterfaceData d = InterfaceData::from_traces(
        {[](double x) { return std::sin(std::numbers::pi * x); },
         [](double x) { return std::numbers::pi * std::cos(std::numbers::pi * x); }, [](double) { return 0.0; },
         [](double) { return 0.0; }});
    const ProblemSpec p = ProblemSpec::homogeneous(2, -1);
    for (SeriesMode mode : {SeriesMode::Lifted, SeriesMode::Truncated}) {
        SeriesConfig cfg;
        cfg.mode = mode;
        const ParabolicSolution s(p, d, cfg);
        EXPECT_NEAR(s(0.5, 0.1), 0.3727078388534379, 1e-12);
        EXPECT_NEAR(s(0.25, 0.3), std::exp(-0.3 * std::numbers::pi * std::numbers::pi) * std::sqrt(0.5), 1e-12);
    }
}

TEST(Parabolic, TruncatedModeReproducesTheExampleSeries) {
    SeriesConfig cfg;
    cfg.mode = SeriesMode::Truncated;
    cfg.n_cap = 100;
    const ParabolicSolution s(example_problem(), example(), cfg);
    EXPECT_EQ(s.terms_at(0.5), 100u);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.01, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng), y = uy(rng);
        EXPECT_NEAR(s(x, y), example_three_series(x, y, 100), 1e-9) << x << "," << y;
    }
}

TEST(Parabolic, LiftedModeMatchesSummedSeries) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(1e-3, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng), y = uy(rng);
        EXPECT_NEAR(lifted()(x, y), example_u_parabolic_exact(x, y), 1e-9) << x << "," << y;
    }
}

TEST(Parabolic, WallDataAttainedExactly) {
    for (double y = 0.001; y <= 1.0; y += 0.037) {
        EXPECT_NEAR(lifted()(0.0, y), 1.0 - y, 1e-14);
        EXPECT_NEAR(lifted()(1.0, y), y, 1e-14);
    }
}

TEST(Parabolic, HeatResidual) {
    const double hx = 1e-3, hy = 1e-4;
    double sup = 0.0;
    for (double y = 0.05; y <= 0.95; y += 0.05) {
        for (double x = 0.02; x < 0.99; x += 0.04) {
            const ParabolicSolution& u = lifted();
            const double uxx = (u(x + hx, y) - 2 * u(x, y) + u(x - hx, y)) / (hx * hx);
            const double uy = (u(x, y + hy) - u(x, y - hy)) / (2 * hy);
            sup = std::max(sup, std::abs(uxx - uy));
        }
    }
    EXPECT_LT(sup, 1e-4);
}

TEST(Parabolic, ApproachesTauAtTheInterface) {
    double prev = 1.0;
    for (double y : {1e-1, 1e-2, 1e-3}) {
        double sup = 0.0;
        for (double x = 0.05; x < 0.96; x += 0.05) sup = std::max(sup, std::abs(lifted()(x, y) - example().tau(x)));
        EXPECT_LT(sup, prev);
        prev = sup;
    }
    EXPECT_LT(prev, 1e-2);
}

TEST(Parabolic, EvaluateRowMatchesPointwise) {
    const std::vector<double> xs{0.0, 0.1, 0.5, 0.77, 1.0};
    const std::vector<double> row = lifted().evaluate_row(0.3, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(row[i], lifted()(xs[i], 0.3));
}

TEST(Parabolic, AdaptiveTermCount) {
    EXPECT_LE(lifted().terms_at(1.0), 3u);
    EXPECT_GT(lifted().terms_at(1e-3), lifted().terms_at(0.1));
    EXPECT_LE(lifted().terms_at(1e-3), 200u);
}

TEST(Parabolic, ReliabilityAndRange) {
    EXPECT_THROW(lifted()(0.5, 1e-4), ReliabilityError);
    EXPECT_THROW(lifted()(0.5, 0.0), RangeError);
    EXPECT_THROW(lifted()(0.5, 1.1), RangeError);
    EXPECT_THROW(lifted()(-0.1, 0.5), RangeError);

    SeriesConfig cfg;
    cfg.small_y_images = true;
    const ParabolicSolution s(example_problem(), example(), cfg);
    for (double x : {0.2, 0.5, 0.8}) {
        const double u = s(x, 1e-5);
        EXPECT_NEAR(u, example().tau(x), 1e-3) << x;
        EXPECT_NEAR(u, example_u_parabolic_exact(x, 1e-5, 2000), 1e-6) << x;
    }
    // above y_min images mode changes nothing
    EXPECT_EQ(s(0.4, 0.2), lifted()(0.4, 0.2));
}

TEST(Parabolic, ConfigValidation) {
    SeriesConfig cfg;
    cfg.n_cap = 0;
    EXPECT_THROW(ParabolicSolution(example_problem(), example(), cfg), std::invalid_argument);
    cfg = {};
    cfg.eps_tail = 0.0;
    EXPECT_THROW(check_series_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.n_cap = 205;
    EXPECT_THROW(ParabolicSolution(example_problem(), example(), cfg), std::invalid_argument);
}

TEST(Parabolic, ForcedWallDataUseTheSourceIntegral) {
    // phi0 = y^2: the lift leaves a source 2(A(x)) in the remainder
    const ProblemSpec p = ProblemSpec::from_strings(2, -1, "y^2", "0", "0");
    const InterfaceData d = solve_interface(p);
    const ParabolicSolution s(p, d);
    const double hx = 1e-3, hy = 1e-4;
    for (double y : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(s(0.0, y), y * y, 1e-14);
        for (double x : {0.25, 0.5, 0.75}) {
            const double uxx = (s(x + hx, y) - 2 * s(x, y) + s(x - hx, y)) / (hx * hx);
            const double uy = (s(x, y + hy) - s(x, y - hy)) / (2 * hy);
            EXPECT_NEAR(uxx, uy, 1e-4) << x << "," << y;
        }
    }
}
