#pragma once

#include "morphx/image.hpp"
#include "morphx/morphology.hpp"

namespace morphx {

/// The four panels of a fixed-radius enhancement run: the input, its top-hat
/// and bottom-hat responses, and the combined result.
struct EnhanceStages {
    GrayImage original;
    GrayImage tophat;
    GrayImage bottomhat;
    GrayImage enhanced;
};

/// img - open(img, se); extracts bright detail smaller than the SE.
/// Non-negative everywhere by anti-extensivity of opening.
GrayImage top_hat(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);

/// close(img, se) - img; extracts dark detail smaller than the SE.
/// Non-negative everywhere by extensivity of closing.
GrayImage bottom_hat(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);

/// Combined enhancement: clamp(img + top_hat - bottom_hat), with the sum
/// carried in unbounded intermediates and clamped exactly once at the end.
EnhanceStages enhance_fixed(const GrayImage& img, const DiskSE& se,
                            MorphKernel kernel = kDefaultKernel);

} // namespace morphx
