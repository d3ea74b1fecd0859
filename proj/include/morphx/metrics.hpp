#pragma once

#include <vector>

#include "morphx/enhance.hpp"
#include "morphx/image.hpp"

namespace morphx {

/// Per-pixel partial derivatives, central differences on interior pixels and
/// one-sided differences on the borders.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> gx;
    std::vector<double> gy;
};

GradientField gradient_field(const GrayImage& img);

/// Edge Content: mean gradient-vector magnitude over all pixels,
/// (1 / (m*n)) * sum of sqrt(gx^2 + gy^2). Zero iff the gradient vanishes.
double edge_content(const GrayImage& img);

struct EcSample {
    int radius = 0;
    double ec = 0.0;
};

using EcCurve = std::vector<EcSample>;

/// Schedule and stopping rule for the automatic SE-size search.
struct SearchConfig {
    int r_min = 1;
    int r_max = 25;
    int step = 2;
    double plateau_rel_tol = 0.01;
    int plateau_patience = 2;

    void validate() const;
};

/// Enhances at each radius of the schedule r_min, r_min+step, ... and records
/// the EC of the enhanced image, stopping early once plateau_patience
/// consecutive gains fall below plateau_rel_tol (or at r_max).
EcCurve ec_sweep(const GrayImage& img, const SearchConfig& cfg);

/// Smallest radius followed by plateau_patience consecutive low-gain steps,
/// relative gain (ec[i+1] - ec[i]) / max(ec[i], 1e-12) < plateau_rel_tol.
/// Falls back to the radius of maximal EC (ties -> smallest radius).
int select_se(const EcCurve& curve, const SearchConfig& cfg);

struct EnhanceResult {
    EnhanceStages stages;
    int chosen_radius = 0;
    EcCurve curve;
    double ec_before = 0.0;
    double ec_after = 0.0;
};

/// Full pipeline: sweep, pick the plateau radius, enhance there. ec_after is
/// reported, not asserted, to be larger than ec_before.
EnhanceResult auto_enhance(const GrayImage& img, const SearchConfig& cfg = {});

} // namespace morphx
