#pragma once

#include <filesystem>

#include "morphx/image.hpp"

namespace morphx {

struct LoadedImage {
    GrayImage image;
    PixelDepth source_depth = PixelDepth::Bits8;
};

/// Loads a PNG, TIFF, or PGM file, detected by magic bytes. Color inputs are
/// reduced to luminance with Rec. 601 weights (0.299, 0.587, 0.114); 16-bit
/// samples are scaled into the [0,255] working range.
LoadedImage load_image_with_depth(const std::filesystem::path& path);

GrayImage load_image(const std::filesystem::path& path);

/// Saves as PNG, TIFF, or PGM, chosen by file extension (.png/.tif/.tiff/.pgm).
/// Values are clamped to [0,255] and quantized to the requested depth. The
/// file is written to a temporary name in the destination directory and
/// renamed on success, so the target is never left truncated.
void save_image(const GrayImage& img, const std::filesystem::path& path,
                PixelDepth depth = PixelDepth::Bits8);

} // namespace morphx
