#pragma once

#include "mixedpde/interface_solver.hpp"
#include "mixedpde/problem.hpp"

namespace mixedpde {

/// d'Alembert solution of u_yy = u_xx below the interface:
///
///   u(x,y) = (tau(x+y) + tau(x-y))/2 - (N(x-y) - N(x+y))/2,
///
/// with N the antiderivative of nu, so no quadrature is done per point.
/// Accepts points of the closed triangle (including y = 0); anything else
/// raises RangeError.
double eval_hyperbolic(const InterfaceData& d, double x, double y, double eps_geo = kDefaultEpsGeo);

}  // namespace mixedpde
