#include "morphx/enhance.hpp"

#include <algorithm>

namespace morphx {

namespace {

GrayImage subtract(const GrayImage& a, const GrayImage& b) {
    GrayImage out(a.width(), a.height());
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    auto po = out.pixels();
    for (std::size_t i = 0; i < po.size(); ++i) po[i] = pa[i] - pb[i];
    return out;
}

} // namespace

GrayImage top_hat(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return subtract(img, open(img, se, kernel));
}

GrayImage bottom_hat(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return subtract(close(img, se, kernel), img);
}

EnhanceStages enhance_fixed(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    EnhanceStages stages;
    stages.original = img;
    stages.tophat = top_hat(img, se, kernel);
    stages.bottomhat = bottom_hat(img, se, kernel);

    GrayImage enhanced(img.width(), img.height());
    const auto pi = img.pixels();
    const auto pt = stages.tophat.pixels();
    const auto pb = stages.bottomhat.pixels();
    auto pe = enhanced.pixels();
    for (std::size_t i = 0; i < pe.size(); ++i) {
        const float v = (pi[i] + pt[i]) - pb[i];
        pe[i] = std::min(255.0f, std::max(0.0f, v));
    }
    stages.enhanced = std::move(enhanced);
    return stages;
}

} // namespace morphx
