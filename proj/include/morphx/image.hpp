#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "morphx/errors.hpp"

namespace morphx {

// Sample depth of an image file on disk. In memory every image uses the
// [0,255] working range regardless of the source depth.
enum class PixelDepth { Bits8, Bits16 };

/// Row-major grayscale image. Intensities are stored as float so pipeline
/// intermediates (sums, differences) keep their sign and precision; public
/// operations return values inside [0,255].
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, float fill = 0.0f);
    GrayImage(int width, int height, std::vector<float> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    float& at(int x, int y) { return pixels_[index(x, y)]; }
    float at(int x, int y) const { return pixels_[index(x, y)]; }

    // Replicate (nearest-edge) border extension for out-of-range coordinates.
    float at_clamped(int x, int y) const;

    float* row(int y) { return pixels_.data() + index(0, y); }
    const float* row(int y) const { return pixels_.data() + index(0, y); }

    std::span<float> pixels() { return pixels_; }
    std::span<const float> pixels() const { return pixels_; }

    bool same_size(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<float> pixels_;
};

/// Pointwise min(255, max(0, v)). Idempotent and monotone.
GrayImage clamp_to_range(const GrayImage& img);

} // namespace morphx
