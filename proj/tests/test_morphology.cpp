#include <doctest.h>

#include <cstdlib>
#include <random>

#include "morphx/morphology.hpp"
#include "oracles.hpp"

using morphx::DiskSE;
using morphx::GrayImage;
using morphx::MorphKernel;
using morphx::make_disk;

namespace {

GrayImage invert(const GrayImage& img) {
    GrayImage out(img.width(), img.height());
    auto pi = img.pixels();
    auto po = out.pixels();
    for (size_t i = 0; i < pi.size(); ++i) po[i] = 255.0f - pi[i];
    return out;
}

bool leq_everywhere(const GrayImage& a, const GrayImage& b) {
    auto pa = a.pixels();
    auto pb = b.pixels();
    for (size_t i = 0; i < pa.size(); ++i)
        if (!(pa[i] <= pb[i])) return false;
    return true;
}

} // namespace

TEST_CASE("disk offset counts match the inclusive-boundary definition") {
    CHECK(make_disk(0).offsets.size() == 1);
    CHECK(make_disk(1).offsets.size() == 5);
    CHECK(make_disk(2).offsets.size() == 13);
}

TEST_CASE("make_disk rejects negative radii") {
    CHECK_THROWS_AS(make_disk(-1), morphx::ArgumentError);
}

TEST_CASE("disk is symmetric under negation and axis swap") {
    for (int r : {1, 3, 7, 12}) {
        const DiskSE se = make_disk(r);
        auto has = [&](int dx, int dy) {
            for (auto [ox, oy] : se.offsets)
                if (ox == dx && oy == dy) return true;
            return false;
        };
        for (auto [dx, dy] : se.offsets) {
            CHECK(has(-dx, -dy));
            CHECK(has(dy, dx));
            CHECK(has(-dx, dy));
        }
        CHECK(has(0, 0));
        CHECK(has(r, 0));
        CHECK_FALSE(has(r + 1, 0));
    }
}

TEST_CASE("chord half-widths describe each disk row exactly") {
    for (int r : {0, 1, 2, 5, 9}) {
        const DiskSE se = make_disk(r);
        REQUIRE(se.chord_half_width.size() == static_cast<size_t>(2 * r + 1));
        size_t total = 0;
        for (int dy = -r; dy <= r; ++dy) {
            const int hw = se.chord_half_width[static_cast<size_t>(dy + r)];
            // Row dy spans dx in [-hw, hw]: hw^2 + dy^2 <= r^2 < (hw+1)^2 + dy^2.
            CHECK(hw * hw + dy * dy <= r * r);
            CHECK((hw + 1) * (hw + 1) + dy * dy > r * r);
            total += static_cast<size_t>(2 * hw + 1);
        }
        CHECK(total == se.offsets.size());
    }
}

TEST_CASE("both kernels match the brute-force oracle") {
    std::mt19937 rng(20260301);
    for (int round = 0; round < 60; ++round) {
        const GrayImage img = oracle::random_image(rng, 24, 24);
        const int r = round % 6;
        const DiskSE se = make_disk(r);
        const GrayImage er = oracle::erode(img, r);
        const GrayImage di = oracle::dilate(img, r);
        CHECK(morphx::erode(img, se, MorphKernel::Naive) == er);
        CHECK(morphx::erode(img, se, MorphKernel::ChordRunning) == er);
        CHECK(morphx::dilate(img, se, MorphKernel::Naive) == di);
        CHECK(morphx::dilate(img, se, MorphKernel::ChordRunning) == di);
    }
}

TEST_CASE("radius zero is the identity") {
    std::mt19937 rng(42);
    const GrayImage img = oracle::random_image(rng, 16, 16);
    const DiskSE se = make_disk(0);
    CHECK(morphx::erode(img, se) == img);
    CHECK(morphx::dilate(img, se) == img);
    CHECK(morphx::open(img, se) == img);
    CHECK(morphx::close(img, se) == img);
}

TEST_CASE("erosion-dilation duality under inversion is exact") {
    // Pixels are integer-valued, so 255 - v is exact in float and the duality
    // erode(img) == 255 - dilate(255 - img) holds bit for bit.
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        const GrayImage img = oracle::random_image(rng, 20, 20);
        const DiskSE se = make_disk(1 + round % 4);
        CHECK(morphx::erode(img, se) == invert(morphx::dilate(invert(img), se)));
        CHECK(morphx::open(img, se) == invert(morphx::close(invert(img), se)));
    }
}

TEST_CASE("opening is anti-extensive and closing is extensive") {
    std::mt19937 rng(11);
    for (int round = 0; round < 20; ++round) {
        const GrayImage img = oracle::random_image(rng, 20, 20);
        const DiskSE se = make_disk(1 + round % 5);
        CHECK(leq_everywhere(morphx::erode(img, se), img));
        CHECK(leq_everywhere(img, morphx::dilate(img, se)));
        CHECK(leq_everywhere(morphx::open(img, se), img));
        CHECK(leq_everywhere(img, morphx::close(img, se)));
    }
}

TEST_CASE("opening and closing are idempotent") {
    std::mt19937 rng(13);
    for (int round = 0; round < 10; ++round) {
        const GrayImage img = oracle::random_image(rng, 20, 20);
        const DiskSE se = make_disk(1 + round % 4);
        const GrayImage opened = morphx::open(img, se);
        const GrayImage closed = morphx::close(img, se);
        CHECK(morphx::open(opened, se) == opened);
        CHECK(morphx::close(closed, se) == closed);
    }
}

TEST_CASE("a sub-SE peak erodes away and dilates to the disk shape") {
    GrayImage img(5, 5, 0.0f);
    img.at(2, 2) = 255.0f;
    const DiskSE se = make_disk(1);

    // Every pixel has a zero neighbor inside the radius-1 disk.
    const GrayImage eroded = morphx::erode(img, se);
    for (float v : eroded.pixels()) CHECK(v == 0.0f);

    // The peak spreads to exactly the 5 disk offsets.
    const GrayImage dilated = morphx::dilate(img, se);
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            const bool in_disk = std::abs(x - 2) + std::abs(y - 2) <= 1;
            CHECK(dilated.at(x, y) == (in_disk ? 255.0f : 0.0f));
        }
    }
}

TEST_CASE("constant images are fixed points") {
    const GrayImage img(9, 5, 128.0f);
    for (int r : {0, 1, 3, 8}) {
        const DiskSE se = make_disk(r);
        CHECK(morphx::erode(img, se) == img);
        CHECK(morphx::dilate(img, se) == img);
    }
}

TEST_CASE("single-pixel and single-row images are handled") {
    GrayImage dot(1, 1, 40.0f);
    CHECK(morphx::erode(dot, make_disk(5)) == dot);
    CHECK(morphx::dilate(dot, make_disk(5)) == dot);

    GrayImage row(7, 1, std::vector<float>{5, 1, 9, 3, 8, 2, 6});
    const GrayImage er = morphx::erode(row, make_disk(1));
    const GrayImage oracle_er = oracle::erode(row, 1);
    CHECK(er == oracle_er);
    CHECK(morphx::erode(row, make_disk(1), MorphKernel::Naive) == oracle_er);
}

TEST_CASE("large radius floods to the global extremum") {
    std::mt19937 rng(17);
    const GrayImage img = oracle::random_image_sized(rng, 10, 8);
    float lo = 255.0f, hi = 0.0f;
    for (float v : img.pixels()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const DiskSE se = make_disk(16); // covers the whole image from any pixel
    const GrayImage eroded = morphx::erode(img, se);
    const GrayImage dilated = morphx::dilate(img, se);
    for (float v : eroded.pixels()) CHECK(v == lo);
    for (float v : dilated.pixels()) CHECK(v == hi);
}
