#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "morphx/clahe.hpp"
#include "morphx/metrics.hpp"

namespace morphx {

struct BatchOptions {
    std::filesystem::path input_dir;
    std::filesystem::path output_dir;
    int jobs = 1;
    bool recursive = false;
    bool with_clahe = false;
    SearchConfig search;
    ClaheParams clahe_params;
};

struct BatchReportRow {
    std::string path; // input file, as discovered
    int width = 0;
    int height = 0;
    int chosen_radius = 0;
    double ec_original = 0.0;
    double ec_enhanced = 0.0;
    std::optional<double> ec_clahe;
    double wall_ms = 0.0;
};

struct BatchFailure {
    std::string path;
    std::string message;
};

struct BatchResult {
    std::vector<BatchReportRow> rows;     // one per processed image, sorted by path
    std::vector<BatchFailure> failures;   // sorted by path; never silently dropped
};

/// Enhances every PNG/TIFF/PGM under input_dir with the automatic pipeline,
/// writing results into output_dir under mirrored filenames. Images are
/// processed by a pool of `jobs` workers; the result is deterministic and
/// identical for any worker count. Per-image failures are collected, they do
/// not abort the batch.
BatchResult run_batch(const BatchOptions& opts);

/// Writes the CSV report (header row always present, LF endings, rows sorted
/// by path) and, when failures exist, `<report>.failures.txt` next to it.
void write_batch_report(const BatchResult& result, const std::filesystem::path& csv_path);

} // namespace morphx
