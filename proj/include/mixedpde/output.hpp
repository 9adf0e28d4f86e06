#pragma once

#include <span>
#include <string>
#include <vector>

#include "mixedpde/interface_solver.hpp"
#include "mixedpde/parabolic.hpp"
#include "mixedpde/problem.hpp"

namespace mixedpde {

struct GridSample {
    double x = 0.0;
    double y = 0.0;
    Region region = Region::Outside;
    double u = 0.0;
};

/// Rows, top to bottom: ny_top rows from y = 1 down to y = y_min, the
/// interface row y = 0, then ny_bot rows down to y = -1/2. Each row holds
/// the nx uniform x nodes of [0,1] that lie in the closed domain. Nothing is
/// sampled in 0 < y < y_min.
struct EvalGridSpec {
    std::size_t nx = 101;
    std::size_t ny_top = 51;
    std::size_t ny_bot = 50;
    double y_min = 1e-3;
};

std::vector<GridSample> sample_grid(const ProblemSpec& p, const InterfaceData& d, const SeriesConfig& cfg,
                                    const EvalGridSpec& spec);

/// Header `x,y,region,u`, one LF-terminated row per sample, 17 significant digits.
std::string emit_csv(std::span<const GridSample> samples);

struct SvgOptions {
    std::string title;
    double px_per_unit = 400.0;
};

/// Heatmap of the samples clipped to the closed domain, with axes and a
/// colour bar. Colours interpolate linearly in RGB from #2166ac (min u) to
/// #b2182b (max u); a constant field renders in the min colour.
std::string render_svg(std::span<const GridSample> samples, const SvgOptions& options = {});

}  // namespace mixedpde
