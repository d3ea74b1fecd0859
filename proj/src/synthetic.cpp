#include "morphx/synthetic.hpp"

#include <cmath>
#include <cstdint>

namespace morphx::synthetic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic per-pixel noise in [0, 1); a fixed 64-bit mix so the assets
// are reproducible on any platform.
double noise01(std::uint32_t x, std::uint32_t y, std::uint32_t seed) {
    std::uint64_t v = (static_cast<std::uint64_t>(x) << 40) ^
                      (static_cast<std::uint64_t>(y) << 20) ^ seed;
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    v *= 0xc4ceb9fe1a85ec53ULL;
    v ^= v >> 33;
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

float quantize(double v) {
    double c = std::min(255.0, std::max(0.0, v));
    return static_cast<float>(std::lround(c));
}

} // namespace

GrayImage dental_asset() {
    const int w = 160, h = 120;
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            // Wide ridges (~17 px) are only removed by large disks; fine
            // ridges (~4 px) respond already at small radii.
            const double wide = 46.0 * std::sin(2.0 * kPi * x / 34.0 +
                                                1.2 * std::sin(2.0 * kPi * y / 57.0));
            const double fine = 16.0 * std::sin(2.0 * kPi * x / 7.3 + 0.21 * y);
            const double valley = -24.0 * std::exp(-((y - 62.0) * (y - 62.0)) / (2.0 * 15.0 * 15.0));
            const double texture = 8.0 * (noise01(x, y, 0xDE17A1u) - 0.5);
            img.at(x, y) = quantize(121.0 + wide + fine + valley + texture);
        }
    }
    return img;
}

GrayImage chest_asset() {
    const int w = 192, h = 144;
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double nx = (x - 96.0) / 70.0;
            const double ny = (y - 72.0) / 55.0;
            const double field = 88.0 * std::exp(-(nx * nx + ny * ny));
            const double ribs = 15.0 * std::sin(2.0 * kPi * y / 23.0 + 0.35 * std::sin(2.0 * kPi * x / 90.0));
            const double texture = 7.0 * (noise01(x, y, 0xC4E57u) - 0.5);
            img.at(x, y) = quantize(74.0 + field + ribs + texture);
        }
    }
    return img;
}

GrayImage corpus_image(int index) {
    const int w = 64, h = 64;
    const std::uint32_t seed = 0x5EEDu + static_cast<std::uint32_t>(index) * 7919u;
    const double px = 9.0 + (index % 5) * 3.0;  // ridge period
    const double py = 17.0 + (index % 7) * 2.0; // band period
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double nx = (x - 32.0) / 26.0;
            const double ny = (y - 32.0) / 26.0;
            const double blob = 55.0 * std::exp(-(nx * nx + ny * ny));
            const double ridges = 28.0 * std::sin(2.0 * kPi * x / px + 0.1 * index);
            const double bands = 17.0 * std::sin(2.0 * kPi * y / py);
            const double texture = 10.0 * (noise01(x, y, seed) - 0.5);
            img.at(x, y) = quantize(105.0 + blob + ridges + bands + texture);
        }
    }
    return img;
}

} // namespace morphx::synthetic
