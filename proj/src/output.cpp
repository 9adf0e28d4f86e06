#include "mixedpde/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mixedpde/hyperbolic.hpp"

namespace mixedpde {

std::vector<GridSample> sample_grid(const ProblemSpec& p, const InterfaceData& d, const SeriesConfig& cfg,
                                    const EvalGridSpec& spec) {
    if (spec.nx < 2 || spec.ny_top < 2 || spec.ny_bot < 1)
        throw std::invalid_argument("grid needs nx >= 2, ny_top >= 2, ny_bot >= 1");
    std::vector<double> xs(spec.nx);
    for (std::size_t i = 0; i < spec.nx; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(spec.nx - 1);

    std::vector<GridSample> out;
    SeriesConfig series = cfg;
    series.y_min = std::min(series.y_min, spec.y_min);
    const ParabolicSolution sol(p, d, series);

    for (std::size_t j = 0; j < spec.ny_top; ++j) {
        const double y =
            j + 1 == spec.ny_top ? spec.y_min
                                 : 1.0 - (1.0 - spec.y_min) * static_cast<double>(j) / static_cast<double>(spec.ny_top - 1);
        const std::vector<double> u = sol.evaluate_row(y, xs);
        for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], y, classify_point(xs[i], y), u[i]});
    }
    for (std::size_t k = 0; k <= spec.ny_bot; ++k) {
        const double y = k == 0 ? 0.0 : -0.5 * static_cast<double>(k) / static_cast<double>(spec.ny_bot);
        for (double x : xs) {
            const Region r = classify_point(x, y);
            if (r == Region::Outside) continue;
            out.push_back({x, y, r, eval_hyperbolic(d, x, y)});
        }
    }
    return out;
}

std::string emit_csv(std::span<const GridSample> samples) {
    std::string out = "x,y,region,u\n";
    char buf[160];
    for (const GridSample& s : samples) {
        const std::string_view name = region_name(s.region);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.*s,%.17g\n", s.x, s.y, static_cast<int>(name.size()),
                      name.data(), s.u);
        out += buf;
    }
    return out;
}

namespace {

struct Rgb {
    int r, g, b;
};

constexpr Rgb kLow{0x21, 0x66, 0xac};
constexpr Rgb kHigh{0xb2, 0x18, 0x2b};

std::string colour(double t) {
    t = std::clamp(t, 0.0, 1.0);
    auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(kLow.r, kHigh.r), mix(kLow.g, kHigh.g), mix(kLow.b, kHigh.b));
    return buf;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Edges halfway to the neighbours; the outermost cells extend symmetrically.
std::vector<double> cell_edges(const std::vector<double>& centres) {
    const std::size_t n = centres.size();
    std::vector<double> edges(n + 1);
    if (n == 1) {
        edges[0] = centres[0];
        edges[1] = centres[0];
        return edges;
    }
    for (std::size_t i = 1; i < n; ++i) edges[i] = 0.5 * (centres[i - 1] + centres[i]);
    edges[0] = centres[0] - (edges[1] - centres[0]);
    edges[n] = centres[n - 1] + (centres[n - 1] - edges[n - 1]);
    return edges;
}

}  // namespace

std::string render_svg(std::span<const GridSample> samples, const SvgOptions& options) {
    if (samples.empty()) throw std::invalid_argument("render_svg needs a non-empty grid");
    const double s = options.px_per_unit;
    const double left = 70.0, top = 40.0;
    const double plot_w = s, plot_h = 1.5 * s;
    const double bar_x = left + plot_w + 40.0;
    const double width = bar_x + 110.0, height = top + plot_h + 60.0;
    auto px = [&](double x) { return left + x * s; };
    auto py = [&](double y) { return top + (1.0 - y) * s; };

    double lo = samples[0].u, hi = samples[0].u;
    for (const GridSample& g : samples) {
        lo = std::min(lo, g.u);
        hi = std::max(hi, g.u);
    }
    const double span = hi - lo;
    auto shade = [&](double u) { return colour(span > 0.0 ? (u - lo) / span : 0.0); };

    // group consecutive samples sharing y into rows
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j].y == samples[i].y) ++j;
        rows.emplace_back(i, j);
        i = j;
    }
    std::vector<double> row_y;
    for (const auto& [b, e] : rows) row_y.push_back(samples[b].y);
    const std::vector<double> y_edges = cell_edges(row_y);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    os << "<!-- colour ramp: linear RGB from " << colour(0.0) << " at u=" << fmt_value(lo) << " to " << colour(1.0)
       << " at u=" << fmt_value(hi) << " -->\n";
    os << "<defs><clipPath id=\"domain\"><polygon points=\"" << fmt(px(0)) << ',' << fmt(py(1)) << ' ' << fmt(px(1))
       << ',' << fmt(py(1)) << ' ' << fmt(px(1)) << ',' << fmt(py(0)) << ' ' << fmt(px(0.5)) << ',' << fmt(py(-0.5))
       << ' ' << fmt(px(0)) << ',' << fmt(py(0)) << "\"/></clipPath></defs>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"#ffffff\"/>\n";
    if (!options.title.empty())
        os << "<text x=\"" << fmt(left + 0.5 * plot_w) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           << "font-size=\"16\">" << escape(options.title) << "</text>\n";

    os << "<g clip-path=\"url(#domain)\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto [b, e] = rows[r];
        std::vector<double> xs;
        for (std::size_t i = b; i < e; ++i) xs.push_back(samples[i].x);
        const std::vector<double> x_edges = cell_edges(xs);
        const double y_top = y_edges[r], y_bot = y_edges[r + 1];
        for (std::size_t i = b; i < e; ++i) {
            double x0 = x_edges[i - b], x1 = x_edges[i - b + 1];
            if (x1 <= x0) {  // a lone sample (triangle vertex) gets a square cell
                const double w = 0.5 * std::abs(y_top - y_bot);
                x0 = samples[i].x - w;
                x1 = samples[i].x + w;
            }
            os << "<rect x=\"" << fmt(px(x0)) << "\" y=\"" << fmt(py(y_top)) << "\" width=\"" << fmt((x1 - x0) * s)
               << "\" height=\"" << fmt((y_top - y_bot) * s) << "\" fill=\"" << shade(samples[i].u) << "\"/>\n";
        }
    }
    os << "</g>\n";

    // domain outline and axes
    os << "<polygon points=\"" << fmt(px(0)) << ',' << fmt(py(1)) << ' ' << fmt(px(1)) << ',' << fmt(py(1)) << ' '
       << fmt(px(1)) << ',' << fmt(py(0)) << ' ' << fmt(px(0.5)) << ',' << fmt(py(-0.5)) << ' ' << fmt(px(0)) << ','
       << fmt(py(0)) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(1)) << "\" y2=\"" << fmt(py(0))
       << "\" stroke=\"#000000\" stroke-dasharray=\"4 3\"/>\n";
    for (double x : {0.0, 0.5, 1.0}) {
        os << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(top + plot_h + 20.0)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_value(x) << "</text>\n";
    }
    for (double y : {-0.5, 0.0, 0.5, 1.0}) {
        os << "<text x=\"" << fmt(left - 8.0) << "\" y=\"" << fmt(py(y) + 4.0)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_value(y) << "</text>\n";
    }
    os << "<text x=\"" << fmt(left + 0.5 * plot_w) << "\" y=\"" << fmt(top + plot_h + 45.0)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">x</text>\n";
    os << "<text x=\"" << fmt(left - 45.0) << "\" y=\"" << fmt(top + 0.5 * plot_h)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">y</text>\n";

    // colour bar, max at the top
    const int steps = 32;
    const double bar_h = plot_h * 0.6, bar_top = top + 0.2 * plot_h;
    for (int k = 0; k < steps; ++k) {
        const double t = 1.0 - (k + 0.5) / steps;
        os << "<rect x=\"" << fmt(bar_x) << "\" y=\"" << fmt(bar_top + bar_h * k / steps) << "\" width=\"20.000\" height=\""
           << fmt(bar_h / steps + 0.5) << "\" fill=\"" << colour(t) << "\"/>\n";
    }
    os << "<rect x=\"" << fmt(bar_x) << "\" y=\"" << fmt(bar_top) << "\" width=\"20.000\" height=\"" << fmt(bar_h)
       << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    os << "<text x=\"" << fmt(bar_x + 26.0) << "\" y=\"" << fmt(bar_top + 4.0)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_value(hi) << "</text>\n";
    os << "<text x=\"" << fmt(bar_x + 26.0) << "\" y=\"" << fmt(bar_top + bar_h + 4.0)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_value(lo) << "</text>\n";
    os << "<text x=\"" << fmt(bar_x + 10.0) << "\" y=\"" << fmt(bar_top - 10.0)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">u</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace mixedpde
