#include "morphx/io.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "io_internal.hpp"

namespace fs = std::filesystem;

namespace morphx {
namespace detail {

void write_atomically(const fs::path& path,
                      const std::function<void(const fs::path&)>& writer) {
    fs::path parent = path.parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
        throw IoError("parent directory does not exist: " + parent.string());
    }
    static std::atomic<unsigned> counter{0};
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    try {
        writer(tmp);
        fs::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
}

namespace {

// --- PGM (P2 ascii / P5 binary) ---

class PgmScanner {
public:
    PgmScanner(const std::string& data, const std::string& name)
        : data_(data), name_(name) {}

    // Next whitespace-delimited token, skipping '#' comments.
    std::string next_token() {
        skip_space_and_comments();
        std::size_t start = pos_;
        while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) throw FormatError(name_ + ": truncated PGM header");
        return data_.substr(start, pos_ - start);
    }

    long next_int() {
        std::string tok = next_token();
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw FormatError(name_ + ": bad integer '" + tok + "' in PGM");
        }
    }

    // P5 raster starts after exactly one whitespace byte following maxval.
    std::size_t raster_offset() const { return pos_ + 1; }

    std::size_t pos() const { return pos_; }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            char c = data_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& data_;
    std::string name_;
    std::size_t pos_ = 0;
};

} // namespace

LoadedImage load_pgm(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("cannot read " + path.string());
    const std::string data = ss.str();

    if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5')) {
        throw FormatError(path.string() + ": not a PGM file");
    }
    const bool ascii = data[1] == '2';

    PgmScanner scan(data, path.string());
    scan.next_token(); // magic
    long w = scan.next_int();
    long h = scan.next_int();
    long maxval = scan.next_int();
    if (w < 1 || h < 1) {
        throw FormatError(path.string() + ": zero-dimension PGM");
    }
    if (maxval < 1 || maxval > 65535) {
        throw FormatError(path.string() + ": PGM maxval " + std::to_string(maxval) +
                          " out of range");
    }

    const std::size_t count = static_cast<std::size_t>(w) * h;
    std::vector<float> pixels(count);
    const double scale = 255.0 / static_cast<double>(maxval);

    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            long v = scan.next_int();
            if (v < 0 || v > maxval) {
                throw FormatError(path.string() + ": PGM sample out of range");
            }
            pixels[i] = static_cast<float>(v * scale);
        }
    } else {
        const std::size_t bytes_per = maxval < 256 ? 1 : 2;
        const std::size_t off = scan.raster_offset();
        if (off + count * bytes_per > data.size()) {
            throw FormatError(path.string() + ": truncated PGM raster");
        }
        const auto* raw = reinterpret_cast<const std::uint8_t*>(data.data()) + off;
        for (std::size_t i = 0; i < count; ++i) {
            long v = bytes_per == 1
                         ? raw[i]
                         : (static_cast<long>(raw[2 * i]) << 8) | raw[2 * i + 1];
            if (v > maxval) {
                throw FormatError(path.string() + ": PGM sample out of range");
            }
            pixels[i] = static_cast<float>(v * scale);
        }
    }

    return LoadedImage{
        GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(pixels)),
        maxval < 256 ? PixelDepth::Bits8 : PixelDepth::Bits16};
}

void save_pgm(const GrayImage& img, const fs::path& path, PixelDepth depth) {
    write_atomically(path, [&](const fs::path& tmp) {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        const bool wide = depth == PixelDepth::Bits16;
        out << "P5\n" << img.width() << " " << img.height() << "\n"
            << (wide ? 65535 : 255) << "\n";
        std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width()) * (wide ? 2 : 1));
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                if (wide) {
                    std::uint16_t v = quantize16(img.at(x, y));
                    row[2 * x] = static_cast<std::uint8_t>(v >> 8);
                    row[2 * x + 1] = static_cast<std::uint8_t>(v & 0xff);
                } else {
                    row[x] = quantize8(img.at(x, y));
                }
            }
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row.size()));
        }
        if (!out.good()) throw IoError("write failed: " + tmp.string());
    });
}

} // namespace detail

namespace {

enum class Container { Png, Tiff, Pgm };

Container sniff_format(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    unsigned char magic[8] = {};
    in.read(reinterpret_cast<char*>(magic), sizeof magic);
    const std::streamsize got = in.gcount();
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (got >= 8 && std::equal(png_sig, png_sig + 8, magic)) return Container::Png;
    if (got >= 4 &&
        ((magic[0] == 'I' && magic[1] == 'I' && magic[2] == 42 && magic[3] == 0) ||
         (magic[0] == 'M' && magic[1] == 'M' && magic[2] == 0 && magic[3] == 42))) {
        return Container::Tiff;
    }
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
        return Container::Pgm;
    }
    throw FormatError(path.string() + ": unsupported image format");
}

std::string lower_extension(const fs::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

} // namespace

LoadedImage load_image_with_depth(const fs::path& path) {
    switch (sniff_format(path)) {
        case Container::Png: return detail::load_png(path);
        case Container::Tiff: return detail::load_tiff(path);
        case Container::Pgm: return detail::load_pgm(path);
    }
    throw FormatError(path.string() + ": unsupported image format");
}

GrayImage load_image(const fs::path& path) {
    return load_image_with_depth(path).image;
}

void save_image(const GrayImage& img, const fs::path& path, PixelDepth depth) {
    if (img.empty()) throw ArgumentError("cannot save an empty image");
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        detail::save_png(img, path, depth);
    } else if (ext == ".tif" || ext == ".tiff") {
        detail::save_tiff(img, path, depth);
    } else if (ext == ".pgm") {
        detail::save_pgm(img, path, depth);
    } else {
        throw FormatError("unsupported output extension '" + ext + "' for " + path.string());
    }
}

} // namespace morphx
