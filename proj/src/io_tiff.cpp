#include <tiffio.h>

#include <cstdarg>
#include <cstdio>
#include <memory>
#include <mutex>
#include <vector>

#include "io_internal.hpp"

namespace fs = std::filesystem;

namespace morphx::detail {
namespace {

thread_local std::string tiff_last_error;

void tiff_error_handler(const char*, const char* fmt, va_list args) {
    char buf[512];
    std::vsnprintf(buf, sizeof buf, fmt, args);
    tiff_last_error = buf;
}

void tiff_warning_handler(const char*, const char*, va_list) {}

void install_tiff_handlers() {
    static std::once_flag once;
    std::call_once(once, [] {
        TIFFSetErrorHandler(tiff_error_handler);
        TIFFSetWarningHandler(tiff_warning_handler);
    });
}

struct TiffCloser {
    void operator()(TIFF* t) const {
        if (t) TIFFClose(t);
    }
};
using TiffPtr = std::unique_ptr<TIFF, TiffCloser>;

std::string tiff_error_or(const std::string& fallback) {
    return tiff_last_error.empty() ? fallback : tiff_last_error;
}

} // namespace

LoadedImage load_tiff(const fs::path& path) {
    install_tiff_handlers();
    tiff_last_error.clear();

    TiffPtr tif(TIFFOpen(path.c_str(), "r"));
    if (!tif) throw FormatError(path.string() + ": " + tiff_error_or("cannot parse TIFF"));

    std::uint32_t width = 0, height = 0;
    std::uint16_t bits = 1, samples = 1, photometric = PHOTOMETRIC_MINISBLACK;
    std::uint16_t planar = PLANARCONFIG_CONTIG, sample_format = SAMPLEFORMAT_UINT;
    TIFFGetField(tif.get(), TIFFTAG_IMAGEWIDTH, &width);
    TIFFGetField(tif.get(), TIFFTAG_IMAGELENGTH, &height);
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_BITSPERSAMPLE, &bits);
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_SAMPLESPERPIXEL, &samples);
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_PHOTOMETRIC, &photometric);
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_PLANARCONFIG, &planar);
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_SAMPLEFORMAT, &sample_format);

    if (width < 1 || height < 1) {
        throw FormatError(path.string() + ": zero-dimension TIFF");
    }
    if (TIFFIsTiled(tif.get())) {
        throw FormatError(path.string() + ": tiled TIFF is not supported");
    }
    if (bits != 8 && bits != 16) {
        throw FormatError(path.string() + ": unsupported TIFF bit depth " +
                          std::to_string(bits));
    }
    if (samples != 1 && samples != 3 && samples != 4) {
        throw FormatError(path.string() + ": unsupported TIFF sample count " +
                          std::to_string(samples));
    }
    if (samples > 1 && planar != PLANARCONFIG_CONTIG) {
        throw FormatError(path.string() + ": planar TIFF is not supported");
    }
    if (photometric != PHOTOMETRIC_MINISBLACK && photometric != PHOTOMETRIC_MINISWHITE &&
        photometric != PHOTOMETRIC_RGB) {
        throw FormatError(path.string() + ": unsupported TIFF photometric " +
                          std::to_string(photometric));
    }
    if (sample_format != SAMPLEFORMAT_UINT && sample_format != SAMPLEFORMAT_VOID) {
        throw FormatError(path.string() + ": unsupported TIFF sample format");
    }

    const int w = static_cast<int>(width);
    const int h = static_cast<int>(height);
    const bool invert = photometric == PHOTOMETRIC_MINISWHITE;
    std::vector<float> pixels(static_cast<std::size_t>(w) * h);
    std::vector<std::uint8_t> scanline(TIFFScanlineSize(tif.get()));

    for (int y = 0; y < h; ++y) {
        if (TIFFReadScanline(tif.get(), scanline.data(), static_cast<std::uint32_t>(y)) == -1) {
            throw FormatError(path.string() + ": " + tiff_error_or("TIFF read failed"));
        }
        for (int x = 0; x < w; ++x) {
            double v;
            if (bits == 8) {
                const std::uint8_t* p = scanline.data() + static_cast<std::size_t>(x) * samples;
                auto sample = [&](int c) {
                    return static_cast<double>(invert ? 255 - p[c] : p[c]);
                };
                v = samples == 1 ? sample(0) : rec601_luma(sample(0), sample(1), sample(2));
            } else {
                // libtiff byte-swaps scanlines to host order.
                const auto* p = reinterpret_cast<const std::uint16_t*>(scanline.data()) +
                                static_cast<std::size_t>(x) * samples;
                auto sample = [&](int c) {
                    std::uint16_t raw = invert ? static_cast<std::uint16_t>(65535 - p[c]) : p[c];
                    return static_cast<double>(scale16(raw));
                };
                v = samples == 1 ? sample(0) : rec601_luma(sample(0), sample(1), sample(2));
            }
            pixels[static_cast<std::size_t>(y) * w + x] = static_cast<float>(v);
        }
    }

    return LoadedImage{GrayImage(w, h, std::move(pixels)),
                       bits == 16 ? PixelDepth::Bits16 : PixelDepth::Bits8};
}

void save_tiff(const GrayImage& img, const fs::path& path, PixelDepth depth) {
    install_tiff_handlers();
    write_atomically(path, [&](const fs::path& tmp) {
        tiff_last_error.clear();
        TiffPtr tif(TIFFOpen(tmp.c_str(), "w"));
        if (!tif) throw IoError("cannot open " + tmp.string() + " for writing");

        const bool wide = depth == PixelDepth::Bits16;
        TIFFSetField(tif.get(), TIFFTAG_IMAGEWIDTH, static_cast<std::uint32_t>(img.width()));
        TIFFSetField(tif.get(), TIFFTAG_IMAGELENGTH, static_cast<std::uint32_t>(img.height()));
        TIFFSetField(tif.get(), TIFFTAG_BITSPERSAMPLE, static_cast<std::uint16_t>(wide ? 16 : 8));
        TIFFSetField(tif.get(), TIFFTAG_SAMPLESPERPIXEL, static_cast<std::uint16_t>(1));
        TIFFSetField(tif.get(), TIFFTAG_PHOTOMETRIC, PHOTOMETRIC_MINISBLACK);
        TIFFSetField(tif.get(), TIFFTAG_COMPRESSION, COMPRESSION_NONE);
        TIFFSetField(tif.get(), TIFFTAG_PLANARCONFIG, PLANARCONFIG_CONTIG);
        TIFFSetField(tif.get(), TIFFTAG_ORIENTATION, ORIENTATION_TOPLEFT);
        TIFFSetField(tif.get(), TIFFTAG_ROWSPERSTRIP,
                     TIFFDefaultStripSize(tif.get(), 0));

        std::vector<std::uint8_t> row8(img.width());
        std::vector<std::uint16_t> row16(img.width());
        for (int y = 0; y < img.height(); ++y) {
            void* data;
            if (wide) {
                for (int x = 0; x < img.width(); ++x) row16[x] = quantize16(img.at(x, y));
                data = row16.data();
            } else {
                for (int x = 0; x < img.width(); ++x) row8[x] = quantize8(img.at(x, y));
                data = row8.data();
            }
            if (TIFFWriteScanline(tif.get(), data, static_cast<std::uint32_t>(y)) == -1) {
                throw IoError(tmp.string() + ": " + tiff_error_or("TIFF write failed"));
            }
        }
    });
}

} // namespace morphx::detail
