#include "mixedpde/hyperbolic.hpp"

#include <algorithm>
#include <cstdio>

namespace mixedpde {

double eval_hyperbolic(const InterfaceData& d, double x, double y, double eps_geo) {
    if (!in_closed_hyperbolic(classify_point(x, y, eps_geo))) {
        char buf[112];
        std::snprintf(buf, sizeof buf, "point (%.17g, %.17g) is outside the closed hyperbolic triangle", x, y);
        throw RangeError(buf);
    }
    const double lo = std::clamp(x + y, 0.0, 1.0);
    const double hi = std::clamp(x - y, 0.0, 1.0);
    return 0.5 * (d.tau(lo) + d.tau(hi)) - 0.5 * (d.nu_antider(hi) - d.nu_antider(lo));
}

}  // namespace mixedpde
