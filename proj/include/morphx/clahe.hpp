#pragma once

#include "morphx/image.hpp"
#include "morphx/metrics.hpp"

namespace morphx {

/// Contrast-limited adaptive histogram equalization parameters. clip_limit is
/// normalized: each tile histogram is clipped at clip_limit * (tile pixel
/// count), with the excess redistributed uniformly.
struct ClaheParams {
    int tiles_x = 8;
    int tiles_y = 8;
    int bins = 128;
    double clip_limit = 0.01;

    void validate(int image_width, int image_height) const;
};

/// Per-tile clipped-histogram equalization with bilinear blending of the four
/// surrounding tile mappings (corner/edge regions replicate the border tiles).
/// With a 1x1 grid and clip_limit 1.0 this reduces to plain global histogram
/// equalization.
GrayImage clahe(const GrayImage& img, const ClaheParams& params);

struct CompareResult {
    EnhanceResult proposed;
    GrayImage clahe_out;
    double ec_original = 0.0;
    double ec_proposed = 0.0;
    double ec_clahe = 0.0;
};

/// Runs the automatic enhancement and CLAHE on the same input and reports the
/// EC of the original, the proposed result, and the CLAHE result.
CompareResult compare(const GrayImage& img, const SearchConfig& cfg,
                      const ClaheParams& params);

} // namespace morphx
