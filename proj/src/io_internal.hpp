#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>

#include "morphx/io.hpp"

namespace morphx::detail {

LoadedImage load_png(const std::filesystem::path& path);
void save_png(const GrayImage& img, const std::filesystem::path& path, PixelDepth depth);

LoadedImage load_tiff(const std::filesystem::path& path);
void save_tiff(const GrayImage& img, const std::filesystem::path& path, PixelDepth depth);

LoadedImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path, PixelDepth depth);

// Writes through `writer(tmp_path)` then renames tmp_path onto `path`.
// The temporary lives in the destination directory so the rename is atomic.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(const std::filesystem::path&)>& writer);

// Rec. 601 luma. Equal channels pass through unchanged so that converting an
// already-gray image is exactly the identity.
inline double rec601_luma(double r, double g, double b) {
    if (r == g && g == b) return r;
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

inline std::uint8_t quantize8(float v) {
    double c = std::min(255.0, std::max(0.0, static_cast<double>(v)));
    return static_cast<std::uint8_t>(std::lround(c));
}

inline std::uint16_t quantize16(float v) {
    double c = std::min(255.0, std::max(0.0, static_cast<double>(v)));
    return static_cast<std::uint16_t>(std::lround(c * 65535.0 / 255.0));
}

inline float scale16(std::uint16_t v) {
    return static_cast<float>(v * 255.0 / 65535.0);
}

} // namespace morphx::detail
