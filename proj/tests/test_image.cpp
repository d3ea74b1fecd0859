#include <doctest.h>

#include "morphx/image.hpp"

using morphx::GrayImage;

TEST_CASE("constructor validates dimensions") {
    CHECK_THROWS_AS(GrayImage(0, 4), morphx::ArgumentError);
    CHECK_THROWS_AS(GrayImage(4, 0), morphx::ArgumentError);
    CHECK_THROWS_AS(GrayImage(-1, 4), morphx::ArgumentError);
    CHECK_THROWS_AS(GrayImage(4, -1), morphx::ArgumentError);
    CHECK_THROWS_AS(GrayImage(2, 2, std::vector<float>{1.0f, 2.0f, 3.0f}),
                    morphx::ArgumentError);
    CHECK_NOTHROW(GrayImage(1, 1));
}

TEST_CASE("default construction is an empty image") {
    GrayImage img;
    CHECK(img.empty());
    CHECK(img.width() == 0);
    CHECK(img.height() == 0);
    CHECK(img.pixel_count() == 0);
}

TEST_CASE("fill constructor and accessors are row-major") {
    GrayImage img(3, 2, 7.0f);
    CHECK(img.pixel_count() == 6);
    for (float v : img.pixels()) CHECK(v == 7.0f);

    img.at(2, 1) = 99.0f;
    CHECK(img.pixels()[5] == 99.0f);
    CHECK(img.row(1)[2] == 99.0f);
}

TEST_CASE("at_clamped replicates the nearest edge pixel") {
    GrayImage img(2, 2, std::vector<float>{1.0f, 2.0f, 3.0f, 4.0f});
    CHECK(img.at_clamped(-5, -5) == 1.0f);
    CHECK(img.at_clamped(10, -1) == 2.0f);
    CHECK(img.at_clamped(-1, 10) == 3.0f);
    CHECK(img.at_clamped(10, 10) == 4.0f);
    CHECK(img.at_clamped(0, 1) == 3.0f);
}

TEST_CASE("equality compares size and every pixel") {
    GrayImage a(2, 2, std::vector<float>{1, 2, 3, 4});
    GrayImage b(2, 2, std::vector<float>{1, 2, 3, 4});
    GrayImage c(2, 2, std::vector<float>{1, 2, 3, 5});
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a != GrayImage(4, 1, std::vector<float>{1, 2, 3, 4}));
}

TEST_CASE("clamp_to_range clips to [0,255] and is idempotent") {
    GrayImage img(2, 2, std::vector<float>{-3.5f, 0.0f, 255.0f, 300.25f});
    GrayImage clamped = morphx::clamp_to_range(img);
    CHECK(clamped.pixels()[0] == 0.0f);
    CHECK(clamped.pixels()[1] == 0.0f);
    CHECK(clamped.pixels()[2] == 255.0f);
    CHECK(clamped.pixels()[3] == 255.0f);
    CHECK(morphx::clamp_to_range(clamped) == clamped);

    GrayImage triple(3, 1, std::vector<float>{-12.0f, 300.0f, 128.0f});
    GrayImage out = morphx::clamp_to_range(triple);
    CHECK(out.pixels()[0] == 0.0f);
    CHECK(out.pixels()[1] == 255.0f);
    CHECK(out.pixels()[2] == 128.0f);
}
