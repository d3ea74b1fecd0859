#pragma once

#include <utility>
#include <vector>

#include "morphx/image.hpp"

namespace morphx {

/// Discretized disk: all integer offsets (dx, dy) with dx^2 + dy^2 <= radius^2.
/// Contains the origin and is symmetric under negation, axis reflection, and
/// 90-degree rotation.
struct DiskSE {
    int radius = 0;
    std::vector<std::pair<int, int>> offsets; // (dx, dy), scanned row by row
    // chord_half_width[dy + radius] = largest |dx| on that disk row.
    std::vector<int> chord_half_width;
};

DiskSE make_disk(int radius);

/// Kernel selection for erode/dilate. Both produce bit-identical output;
/// ChordRunning decomposes the disk into per-row chords and evaluates each
/// chord with a monotone-wedge sliding extremum, dropping the per-pixel cost
/// from O(r^2) to O(r).
enum class MorphKernel { Naive, ChordRunning };

inline constexpr MorphKernel kDefaultKernel = MorphKernel::ChordRunning;

/// Pointwise min over the SE neighborhood with replicate border extension.
GrayImage erode(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);
/// Pointwise max over the SE neighborhood with replicate border extension.
GrayImage dilate(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);
/// Erosion followed by dilation; anti-extensive and idempotent.
GrayImage open(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);
/// Dilation followed by erosion; extensive and idempotent.
GrayImage close(const GrayImage& img, const DiskSE& se, MorphKernel kernel = kDefaultKernel);

} // namespace morphx
