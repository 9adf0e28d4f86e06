#include "mixedpde/problem.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace mixedpde {

ProblemSpec ProblemSpec::from_strings(double a, double b, std::string_view phi0, std::string_view phi1,
                                      std::string_view psi) {
    ProblemSpec p;
    p.a = a;
    p.b = b;
    p.phi0 = parse(phi0, "y");
    p.phi1 = parse(phi1, "y");
    p.psi = parse(psi, "x");
    return p;
}

ProblemSpec ProblemSpec::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProblemFormatError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ProblemFormatError("problem file must be a JSON object");

    static const char* const kKeys[] = {"a", "b", "phi0", "phi1", "psi"};
    for (const auto& [key, _] : doc.items()) {
        bool known = false;
        for (const char* k : kKeys) known = known || key == k;
        if (!known) throw ProblemFormatError("unknown key '" + key + "' in problem file");
    }
    for (const char* k : kKeys) {
        if (!doc.contains(k)) throw ProblemFormatError(std::string("missing key '") + k + "' in problem file");
    }
    if (!doc["a"].is_number() || !doc["b"].is_number())
        throw ProblemFormatError("keys 'a' and 'b' must be numbers");
    for (const char* k : {"phi0", "phi1", "psi"}) {
        if (!doc[k].is_string()) throw ProblemFormatError(std::string("key '") + k + "' must be a string");
    }

    auto field = [&](const char* key, std::string_view var) {
        const std::string src = doc[key].get<std::string>();
        try {
            return parse(src, var);
        } catch (const std::exception& e) {
            throw ProblemFormatError(std::string(key) + ": " + e.what());
        }
    };
    ProblemSpec p;
    p.a = doc["a"].get<double>();
    p.b = doc["b"].get<double>();
    p.phi0 = field("phi0", "y");
    p.phi1 = field("phi1", "y");
    p.psi = field("psi", "x");
    return p;
}

std::string ProblemSpec::to_json() const {
    nlohmann::ordered_json doc;
    doc["a"] = a;
    doc["b"] = b;
    doc["phi0"] = phi0.to_string();
    doc["phi1"] = phi1.to_string();
    doc["psi"] = psi.to_string();
    return doc.dump(2) + "\n";
}

ProblemSpec ProblemSpec::worked_example() { return from_strings(2.0, -1.0, "1 - y", "y", "x"); }

ProblemSpec ProblemSpec::homogeneous(double a, double b) { return from_strings(a, b, "0", "0", "0"); }

ValidationReport validate(const ProblemSpec& p, double tol_compat) {
    ValidationReport r;
    r.nondegenerate = p.a * p.a + p.b * p.b > 0.0;
    r.a_ne_b = p.a != p.b;
    if (!r.nondegenerate) r.messages.emplace_back("coefficients must satisfy a^2 + b^2 > 0");
    if (!r.a_ne_b) r.messages.emplace_back("hypothesis a != b violated (a = b makes the interface relation singular)");

    auto at = [](const Expr& e, double x, const char* what) {
        try {
            return e.evaluate(x);
        } catch (const DomainError& err) {
            throw DomainError(std::string(what) + ": " + err.node(), err.argument());
        }
    };
    const double phi0_0 = at(p.phi0, 0.0, "phi0 at y=0");
    const double phi1_0 = at(p.phi1, 0.0, "phi1 at y=0");
    const double psi_0 = at(p.psi, 0.0, "psi at x=0");
    const double psi_1 = at(p.psi, 1.0, "psi at x=1");
    r.compatibility_defect = p.a * p.a * phi0_0 - p.b * p.b * phi1_0 - (p.a * psi_0 - p.b * psi_1);

    const bool compatible = std::abs(r.compatibility_defect) <= tol_compat;
    if (!compatible) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "compatibility condition a^2 phi0(0) - b^2 phi1(0) = a psi(0) - b psi(1) violated "
                      "(defect %.17g)",
                      r.compatibility_defect);
        r.messages.emplace_back(buf);
    }
    r.ok = r.nondegenerate && r.a_ne_b && compatible;
    return r;
}

void require_valid(const ValidationReport& report, bool force) {
    if (report.ok) return;
    if (force && report.nondegenerate && report.a_ne_b) return;
    std::string msg;
    for (const auto& m : report.messages) {
        if (!msg.empty()) msg += "; ";
        msg += m;
    }
    throw ValidationError(msg);
}

std::string_view region_name(Region r) noexcept {
    switch (r) {
        case Region::ParabolicInterior: return "parabolic_interior";
        case Region::HyperbolicInterior: return "hyperbolic_interior";
        case Region::Interface: return "interface";
        case Region::ParabolicBoundary: return "parabolic_boundary";
        case Region::HyperbolicBoundary: return "hyperbolic_boundary";
        case Region::Outside: return "outside";
    }
    return "outside";
}

Region classify_point(double x, double y, double eps) {
    const bool x_in = x >= -eps && x <= 1.0 + eps;
    if (std::abs(y) <= eps) return x_in ? Region::Interface : Region::Outside;

    if (y > 0.0) {
        if (!x_in || y > 1.0 + eps) return Region::Outside;
        const bool on_wall = std::abs(x) <= eps || std::abs(x - 1.0) <= eps;
        const bool on_lid = std::abs(y - 1.0) <= eps;
        return on_wall || on_lid ? Region::ParabolicBoundary : Region::ParabolicInterior;
    }

    // y < 0: triangle bounded by AC: x + y = 0 and BC: x - y = 1
    const double s_ac = x + y;
    const double s_bc = x - y - 1.0;
    if (s_ac < -eps || s_bc > eps) return Region::Outside;
    if (std::abs(s_ac) <= eps || std::abs(s_bc) <= eps) return Region::HyperbolicBoundary;
    return Region::HyperbolicInterior;
}

}  // namespace mixedpde
