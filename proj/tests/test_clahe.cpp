#include <doctest.h>

#include <random>

#include "morphx/clahe.hpp"
#include "oracles.hpp"

using morphx::ClaheParams;
using morphx::GrayImage;

TEST_CASE("parameter validation") {
    ClaheParams p;
    CHECK_NOTHROW(p.validate(64, 64));

    ClaheParams bad = p;
    bad.tiles_x = 0;
    CHECK_THROWS_AS(bad.validate(64, 64), morphx::ArgumentError);
    bad = p;
    bad.tiles_y = -1;
    CHECK_THROWS_AS(bad.validate(64, 64), morphx::ArgumentError);
    bad = p;
    bad.bins = 1;
    CHECK_THROWS_AS(bad.validate(64, 64), morphx::ArgumentError);
    bad = p;
    bad.clip_limit = 0.0;
    CHECK_THROWS_AS(bad.validate(64, 64), morphx::ArgumentError);
    bad = p;
    bad.clip_limit = 1.5;
    CHECK_THROWS_AS(bad.validate(64, 64), morphx::ArgumentError);

    // The image must be at least one pixel per tile in each direction.
    CHECK_THROWS_AS(p.validate(7, 64), morphx::ArgumentError);
    CHECK_THROWS_AS(p.validate(64, 7), morphx::ArgumentError);
}

TEST_CASE("defaults are in their documented ranges") {
    const ClaheParams p;
    CHECK(p.tiles_x == 8);
    CHECK(p.tiles_y == 8);
    CHECK(p.bins == 128);
    CHECK(p.clip_limit > 0.0);
    CHECK(p.clip_limit <= 1.0);
}

TEST_CASE("one unclipped tile reduces to global histogram equalization") {
    std::mt19937 rng(20260420);
    ClaheParams p;
    p.tiles_x = 1;
    p.tiles_y = 1;
    p.clip_limit = 1.0; // threshold == tile pixel count: nothing can clip
    for (int round = 0; round < 30; ++round) {
        const GrayImage img = oracle::random_image_sized(rng, 4 + round % 24, 4 + (round * 5) % 24);
        CHECK(morphx::clahe(img, p) == oracle::global_equalize(img, p.bins));
    }
}

TEST_CASE("a two-level checkerboard maps to its closed-form equalization") {
    // Values 64 and 192 in equal numbers. With 128 bins, 64 lands in bin 32
    // and 192 in bin 96; the CDF is 0.5 and 1.0 there, so unclipped global
    // equalization maps 64 -> 127.5 and 192 -> 255 exactly.
    GrayImage img(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) img.at(x, y) = ((x + y) % 2) ? 192.0f : 64.0f;

    ClaheParams p;
    p.tiles_x = 1;
    p.tiles_y = 1;
    p.clip_limit = 1.0;
    const GrayImage out = morphx::clahe(img, p);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            CHECK(out.at(x, y) == (((x + y) % 2) ? 255.0f : 127.5f));
}

TEST_CASE("output stays inside [0,255]") {
    std::mt19937 rng(20260421);
    const GrayImage img = oracle::random_image_sized(rng, 40, 40);
    const GrayImage out = morphx::clahe(img, ClaheParams{});
    REQUIRE(out.same_size(img));
    for (float v : out.pixels()) {
        CHECK(v >= 0.0f);
        CHECK(v <= 255.0f);
    }
}

TEST_CASE("constant images stay constant") {
    // Every tile histogram is a single spike; clipping redistributes uniformly
    // but the mapped value for the occupied bin is still a single level.
    const GrayImage img(32, 24, 99.0f);
    const GrayImage out = morphx::clahe(img, ClaheParams{});
    const float v0 = out.pixels()[0];
    for (float v : out.pixels()) CHECK(v == v0);
}

TEST_CASE("a small clip limit flattens less than an unclipped run") {
    // On a strongly bimodal image, unclipped equalization stretches the two
    // modes to the ends of the range; a tight clip limit keeps the mapping
    // closer to identity, so the output variance is smaller.
    GrayImage img(64, 64);
    std::mt19937 rng(20260422);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> lo(90, 110);
    std::uniform_int_distribution<int> hi(140, 160);
    for (float& v : img.pixels()) v = static_cast<float>(coin(rng) ? hi(rng) : lo(rng));

    ClaheParams clipped;
    clipped.tiles_x = 1;
    clipped.tiles_y = 1;
    clipped.clip_limit = 0.01;
    ClaheParams open = clipped;
    open.clip_limit = 1.0;

    auto variance = [](const GrayImage& im) {
        double mean = 0.0;
        for (float v : im.pixels()) mean += v;
        mean /= static_cast<double>(im.pixel_count());
        double var = 0.0;
        for (float v : im.pixels()) var += (v - mean) * (v - mean);
        return var / static_cast<double>(im.pixel_count());
    };
    CHECK(variance(morphx::clahe(img, clipped)) < variance(morphx::clahe(img, open)));
}

TEST_CASE("tile grids that do not divide the image evenly still cover it") {
    std::mt19937 rng(20260423);
    const GrayImage img = oracle::random_image_sized(rng, 37, 29);
    ClaheParams p;
    p.tiles_x = 3;
    p.tiles_y = 5;
    const GrayImage out = morphx::clahe(img, p);
    REQUIRE(out.same_size(img));
    for (float v : out.pixels()) {
        CHECK(v >= 0.0f);
        CHECK(v <= 255.0f);
    }
}

TEST_CASE("compare reports consistent metrics") {
    std::mt19937 rng(20260424);
    const GrayImage img = oracle::random_image_sized(rng, 48, 40);
    morphx::SearchConfig cfg;
    cfg.r_max = 5;
    ClaheParams p;
    p.tiles_x = 2;
    p.tiles_y = 2;
    const morphx::CompareResult res = morphx::compare(img, cfg, p);

    CHECK(res.ec_original == morphx::edge_content(img));
    CHECK(res.ec_proposed == res.proposed.ec_after);
    CHECK(res.ec_clahe == morphx::edge_content(res.clahe_out));
    CHECK(res.clahe_out == morphx::clahe(img, p));
}
