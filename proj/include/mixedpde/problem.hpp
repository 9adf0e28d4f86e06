#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpde/expr.hpp"

namespace mixedpde {

inline constexpr double kDefaultTolCompat = 1e-10;
inline constexpr double kDefaultEpsGeo = 1e-12;

/// Raised when the problem data violate a hypothesis of the existence and
/// uniqueness theorem (a = b, a = b = 0, corner compatibility).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed problem file.
class ProblemFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Data of the mixed problem: the heat equation u_xx = u_y on the unit square
/// y > 0, the wave equation u_yy = u_xx in the characteristic triangle y < 0,
/// wall data u(0,y) = phi0(y), u(1,y) = phi1(y), and the characteristic
/// condition a*u(x/2,-x/2) + b*u((x+1)/2,(x-1)/2) = psi(x).
struct ProblemSpec {
    double a = 0.0;
    double b = 0.0;
    Expr phi0 = Expr::constant(0.0);  // in y
    Expr phi1 = Expr::constant(0.0);  // in y
    Expr psi = Expr::constant(0.0);   // in x

    /// Parses the three data strings; phi0 and phi1 use variable "y", psi uses "x".
    static ProblemSpec from_strings(double a, double b, std::string_view phi0, std::string_view phi1,
                                    std::string_view psi);

    /// Reads the JSON problem document {"a","b","phi0","phi1","psi"}.
    /// Unknown or missing keys are rejected.
    static ProblemSpec from_json(std::string_view text);

    /// Serializes back to the problem-file format (expressions printed by Expr::to_string).
    std::string to_json() const;

    /// The worked example with psi = x; its corner compatibility defect is 3.
    static ProblemSpec worked_example();

    /// phi0 = phi1 = psi = 0 with the given coefficients.
    static ProblemSpec homogeneous(double a, double b);
};

struct ValidationReport {
    bool ok = false;
    bool a_ne_b = false;
    bool nondegenerate = false;
    double compatibility_defect = 0.0;
    std::vector<std::string> messages;
};

/// compatibility_defect = a^2 phi0(0) - b^2 phi1(0) - (a psi(0) - b psi(1)).
ValidationReport validate(const ProblemSpec& p, double tol_compat = kDefaultTolCompat);

/// Throws ValidationError built from the report's messages unless it is ok.
/// With `force`, only the compatibility check is waived.
void require_valid(const ValidationReport& report, bool force);

enum class Region {
    ParabolicInterior,
    HyperbolicInterior,
    Interface,
    ParabolicBoundary,
    HyperbolicBoundary,
    Outside,
};

std::string_view region_name(Region r) noexcept;

/// Locates (x, y) relative to the closed domain: the unit square above the
/// x-axis and the triangle A(0,0), B(1,0), C(1/2,-1/2) below it.
Region classify_point(double x, double y, double eps_geo = kDefaultEpsGeo);

inline bool in_closed_hyperbolic(Region r) {
    return r == Region::HyperbolicInterior || r == Region::HyperbolicBoundary || r == Region::Interface;
}

inline bool in_closed_parabolic(Region r) {
    return r == Region::ParabolicInterior || r == Region::ParabolicBoundary || r == Region::Interface;
}

}  // namespace mixedpde
