#include "morphx/image.hpp"

#include <algorithm>
#include <string>

namespace morphx {

GrayImage::GrayImage(int width, int height, float fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw ArgumentError("image dimensions must be at least 1x1, got " +
                            std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<float> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) {
        throw ArgumentError("image dimensions must be at least 1x1, got " +
                            std::to_string(width) + "x" + std::to_string(height));
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw ArgumentError("pixel buffer size " + std::to_string(pixels_.size()) +
                            " does not match " + std::to_string(width) + "x" +
                            std::to_string(height));
    }
}

float GrayImage::at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return pixels_[index(x, y)];
}

GrayImage clamp_to_range(const GrayImage& img) {
    GrayImage out = img;
    for (float& v : out.pixels()) {
        v = std::min(255.0f, std::max(0.0f, v));
    }
    return out;
}

} // namespace morphx
