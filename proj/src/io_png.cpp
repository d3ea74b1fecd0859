#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "io_internal.hpp"

namespace fs = std::filesystem;

namespace morphx::detail {
namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngMessage {
    std::string text;
};

void error_fn(png_structp png, png_const_charp msg) {
    auto* out = static_cast<PngMessage*>(png_get_error_ptr(png));
    if (out) out->text = msg ? msg : "unknown libpng error";
    png_longjmp(png, 1);
}

void warning_fn(png_structp, png_const_charp) {}

} // namespace

LoadedImage load_png(const fs::path& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path.string());

    PngMessage message;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message,
                                             error_fn, warning_fn);
    if (!png) throw IoError("libpng: out of memory");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng: out of memory");
    }

    // Locals used after the read must be declared before setjmp.
    int width = 0, height = 0, bit_depth = 0, channels = 0;
    std::vector<float> pixels;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path.string() + ": " + message.text);
    }

    png_init_io(png, fp.get());
    // EXPAND: palette -> RGB, gray<8 -> 8, tRNS -> alpha; alpha then stripped.
    png_read_png(png, info,
                 PNG_TRANSFORM_EXPAND | PNG_TRANSFORM_PACKING | PNG_TRANSFORM_STRIP_ALPHA,
                 nullptr);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    bit_depth = png_get_bit_depth(png, info);
    channels = png_get_channels(png, info);
    png_bytepp rows = png_get_rows(png, info);

    if (width < 1 || height < 1) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path.string() + ": zero-dimension PNG");
    }
    if ((bit_depth != 8 && bit_depth != 16) || (channels != 1 && channels != 3)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path.string() + ": unsupported PNG layout (depth " +
                          std::to_string(bit_depth) + ", channels " +
                          std::to_string(channels) + ")");
    }

    pixels.resize(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        const png_bytep row = rows[y];
        for (int x = 0; x < width; ++x) {
            double v;
            if (bit_depth == 8) {
                const png_bytep p = row + static_cast<std::size_t>(x) * channels;
                v = channels == 1 ? p[0] : rec601_luma(p[0], p[1], p[2]);
            } else {
                // 16-bit PNG samples are big-endian in the row buffer.
                const png_bytep p = row + static_cast<std::size_t>(x) * channels * 2;
                auto sample = [&](int c) {
                    return scale16(static_cast<std::uint16_t>((p[2 * c] << 8) | p[2 * c + 1]));
                };
                v = channels == 1 ? sample(0) : rec601_luma(sample(0), sample(1), sample(2));
            }
            pixels[static_cast<std::size_t>(y) * width + x] = static_cast<float>(v);
        }
    }

    PixelDepth depth = bit_depth == 16 ? PixelDepth::Bits16 : PixelDepth::Bits8;
    png_destroy_read_struct(&png, &info, nullptr);
    return LoadedImage{GrayImage(width, height, std::move(pixels)), depth};
}

void save_png(const GrayImage& img, const fs::path& path, PixelDepth depth) {
    write_atomically(path, [&](const fs::path& tmp) {
        FilePtr fp(std::fopen(tmp.c_str(), "wb"));
        if (!fp) throw IoError("cannot open " + tmp.string() + " for writing");

        PngMessage message;
        png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &message,
                                                  error_fn, warning_fn);
        if (!png) throw IoError("libpng: out of memory");
        png_infop info = png_create_info_struct(png);
        if (!info) {
            png_destroy_write_struct(&png, nullptr);
            throw IoError("libpng: out of memory");
        }

        const bool wide = depth == PixelDepth::Bits16;
        const std::size_t stride = static_cast<std::size_t>(img.width()) * (wide ? 2 : 1);
        std::vector<std::uint8_t> buffer(stride * img.height());
        std::vector<png_bytep> row_ptrs(img.height());
        for (int y = 0; y < img.height(); ++y) {
            row_ptrs[y] = buffer.data() + stride * y;
            for (int x = 0; x < img.width(); ++x) {
                if (wide) {
                    std::uint16_t v = quantize16(img.at(x, y));
                    row_ptrs[y][2 * x] = static_cast<std::uint8_t>(v >> 8);
                    row_ptrs[y][2 * x + 1] = static_cast<std::uint8_t>(v & 0xff);
                } else {
                    row_ptrs[y][x] = quantize8(img.at(x, y));
                }
            }
        }

        if (setjmp(png_jmpbuf(png))) {
            png_destroy_write_struct(&png, &info);
            throw IoError(tmp.string() + ": " + message.text);
        }

        png_init_io(png, fp.get());
        png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                     static_cast<png_uint_32>(img.height()), wide ? 16 : 8,
                     PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                     PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        png_write_image(png, row_ptrs.data());
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);

        if (std::fflush(fp.get()) != 0) throw IoError("write failed: " + tmp.string());
    });
}

} // namespace morphx::detail
