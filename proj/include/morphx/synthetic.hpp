#pragma once

#include "morphx/image.hpp"

namespace morphx::synthetic {

/// Dental-style test pattern: wide and narrow bright ridges over a mid-gray
/// background with deterministic texture. 160x120, integer-valued pixels.
GrayImage dental_asset();

/// Chest-style test pattern: low-frequency bright field with rib-like bands
/// and deterministic texture. 192x144, integer-valued pixels.
GrayImage chest_asset();

/// Small textured image for batch corpora; `index` varies the pattern and the
/// texture seed deterministically. 64x64, integer-valued pixels.
GrayImage corpus_image(int index);

} // namespace morphx::synthetic
