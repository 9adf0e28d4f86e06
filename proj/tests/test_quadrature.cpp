#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mixedpde/quadrature.hpp"

using namespace mixedpde;

namespace {

std::vector<double> sample(std::size_t n, double (*f)(double)) {
    const UniformGrid g(n);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(g.node(i));
    return v;
}

double cumulative_error(std::size_t n) {
    const UniformGrid g(n);
    const std::vector<double> f = sample(n, [](double x) { return std::exp(2.0 * x); });
    const std::vector<double> F = cumulative_simpson(f, g.h);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(F[i] - 0.5 * std::expm1(2.0 * g.node(i))));
    return err;
}

}  // namespace

TEST(Quadrature, ConfigMustBeDyadic) {
    EXPECT_NO_THROW(check_quadrature_config({}));
    QuadratureConfig c;
    c.nodes = 4096;
    EXPECT_THROW(check_quadrature_config(c), std::invalid_argument);
    c.nodes = 3;
    EXPECT_THROW(check_quadrature_config(c), std::invalid_argument);
    c.nodes = 5;
    EXPECT_NO_THROW(check_quadrature_config(c));
}

TEST(Quadrature, CumulativeSimpsonIsExactForCubicsAtEveryNode) {
    const std::size_t n = 17;
    const UniformGrid g(n);
    const std::vector<double> f = sample(n, [](double x) { return 1.0 - 3.0 * x + x * x * x; });
    const std::vector<double> F = cumulative_simpson(f, g.h);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = g.node(i);
        const double exact = x - 1.5 * x * x + 0.25 * x * x * x * x;
        // odd nodes use a 3-point panel, exact for quadratics only
        EXPECT_NEAR(F[i], exact, i % 2 == 0 ? 1e-15 : 1e-5) << i;
    }
}

TEST(Quadrature, CumulativeSimpsonConvergesAtThirdOrderOrBetter) {
    const double e1 = cumulative_error(65), e2 = cumulative_error(129), e3 = cumulative_error(257);
    EXPECT_GT(e1 / e2, 7.5);
    EXPECT_GT(e2 / e3, 7.5);
    EXPECT_LT(cumulative_error(4097), 1e-12);
}

TEST(Quadrature, SimpsonNeedsOddCount) {
    std::vector<double> four(4, 1.0);
    EXPECT_THROW(simpson(four, 0.25), std::invalid_argument);
    std::vector<double> five(5, 1.0);
    EXPECT_DOUBLE_EQ(simpson(five, 0.25), 1.0);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly) {
    for (std::size_t n : {1u, 2u, 5u, 16u, 32u}) {
        const GaussLegendreRule r = gauss_legendre(n);
        ASSERT_EQ(r.nodes.size(), n);
        for (std::size_t deg = 0; deg < 2 * n; ++deg) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], static_cast<double>(deg));
            const double exact = deg % 2 == 1 ? 0.0 : 2.0 / static_cast<double>(deg + 1);
            EXPECT_NEAR(s, exact, 1e-13) << "n=" << n << " deg=" << deg;
        }
        for (std::size_t i = 1; i < n; ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    }
}

TEST(Quadrature, HermiteReproducesCubics) {
    const std::size_t n = 9;
    const UniformGrid g(n);
    auto f = [](double x) { return 2.0 - x + 3.0 * x * x - 4.0 * x * x * x; };
    auto df = [](double x) { return -1.0 + 6.0 * x - 12.0 * x * x; };
    std::vector<double> v(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = f(g.node(i));
        s[i] = df(g.node(i));
    }
    for (double x = 0.0; x <= 1.0; x += 0.0123) EXPECT_NEAR(hermite_eval(g, v, s, x), f(x), 1e-14);
    EXPECT_EQ(hermite_eval(g, v, s, 1.0), v.back());
    EXPECT_EQ(hermite_eval(g, v, s, 1.5), v.back());
}

TEST(Quadrature, TridiagonalSolve) {
    // -u'' = 2 on 5 interior nodes, u(0)=u(1)=0 -> u = x(1-x) exactly
    const std::size_t m = 5;
    const double h = 1.0 / (m + 1);
    std::vector<double> lo(m, -1.0), di(m, 2.0), up(m, -1.0), rhs(m, 2.0 * h * h);
    const std::vector<double> u = solve_tridiagonal(lo, di, up, rhs);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = (i + 1) * h;
        EXPECT_NEAR(u[i], x * (1.0 - x), 1e-14);
    }
    std::vector<double> zero(m, 0.0);
    EXPECT_THROW(solve_tridiagonal(lo, zero, up, rhs), std::runtime_error);
}
