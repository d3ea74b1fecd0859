#include "morphx/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <thread>

#include "morphx/io.hpp"
#include "io_internal.hpp"

namespace fs = std::filesystem;

namespace morphx {

namespace {

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".png" || ext == ".tif" || ext == ".tiff" || ext == ".pgm";
}

std::vector<fs::path> collect_inputs(const fs::path& dir, bool recursive) {
    std::vector<fs::path> files;
    auto consider = [&](const fs::directory_entry& entry) {
        if (entry.is_regular_file() && has_image_extension(entry.path())) {
            files.push_back(entry.path());
        }
    };
    if (recursive) {
        for (const auto& entry : fs::recursive_directory_iterator(dir)) consider(entry);
    } else {
        for (const auto& entry : fs::directory_iterator(dir)) consider(entry);
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.generic_string() < b.generic_string();
              });
    return files;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

BatchResult run_batch(const BatchOptions& opts) {
    if (!fs::is_directory(opts.input_dir)) {
        throw IoError("input directory does not exist: " + opts.input_dir.string());
    }
    opts.search.validate();
    if (opts.jobs < 1) throw ArgumentError("jobs must be >= 1");

    const std::vector<fs::path> files = collect_inputs(opts.input_dir, opts.recursive);
    fs::create_directories(opts.output_dir);

    std::vector<std::optional<BatchReportRow>> rows(files.size());
    std::vector<std::optional<BatchFailure>> failures(files.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            const fs::path& file = files[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const GrayImage input = load_image(file);
                const EnhanceResult result = auto_enhance(input, opts.search);

                std::optional<double> ec_clahe;
                if (opts.with_clahe) {
                    ec_clahe = edge_content(clahe(input, opts.clahe_params));
                }

                const fs::path rel = fs::relative(file, opts.input_dir);
                const fs::path out_path = opts.output_dir / rel;
                if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
                save_image(result.stages.enhanced, out_path, PixelDepth::Bits8);

                const auto t1 = std::chrono::steady_clock::now();
                BatchReportRow row;
                row.path = file.generic_string();
                row.width = input.width();
                row.height = input.height();
                row.chosen_radius = result.chosen_radius;
                row.ec_original = result.ec_before;
                row.ec_enhanced = result.ec_after;
                row.ec_clahe = ec_clahe;
                row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                rows[i] = std::move(row);
            } catch (const std::exception& e) {
                failures[i] = BatchFailure{file.generic_string(), e.what()};
            }
        }
    };

    const int thread_count = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(opts.jobs), std::max<std::size_t>(files.size(), 1)));
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    BatchResult result;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (rows[i]) result.rows.push_back(std::move(*rows[i]));
        if (failures[i]) result.failures.push_back(std::move(*failures[i]));
    }
    return result;
}

void write_batch_report(const BatchResult& result, const fs::path& csv_path) {
    detail::write_atomically(csv_path, [&](const fs::path& tmp) {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << "path,width,height,chosen_radius,ec_original,ec_enhanced,ec_clahe,wall_ms\n";
        for (const auto& row : result.rows) {
            out << row.path << ',' << row.width << ',' << row.height << ','
                << row.chosen_radius << ',' << format_double(row.ec_original) << ','
                << format_double(row.ec_enhanced) << ','
                << (row.ec_clahe ? format_double(*row.ec_clahe) : std::string()) << ',';
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
            out << ms << '\n';
        }
        if (!out.good()) throw IoError("write failed: " + tmp.string());
    });

    if (!result.failures.empty()) {
        fs::path failures_path = csv_path;
        failures_path += ".failures.txt";
        detail::write_atomically(failures_path, [&](const fs::path& tmp) {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
            for (const auto& f : result.failures) {
                out << f.path << ": " << f.message << '\n';
            }
            if (!out.good()) throw IoError("write failed: " + tmp.string());
        });
    }
}

} // namespace morphx
