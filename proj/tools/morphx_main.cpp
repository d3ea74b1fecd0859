// morphx: morphological contrast enhancement for grayscale X-ray images.
//
// Subcommands: enhance (fixed radius), auto (EC-driven radius selection),
// compare (proposed vs CLAHE), metrics (EC only), batch (directory runs).
// Machine-readable JSON goes to stdout, progress and errors to stderr.
// Exit codes: 0 success, 1 I/O error, 2 argument error, 3 partial batch failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "morphx/batch.hpp"
#include "morphx/clahe.hpp"
#include "morphx/io.hpp"
#include "morphx/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitArgs = 2;
constexpr int kExitPartialFailure = 3;

void add_search_flags(CLI::App* cmd, morphx::SearchConfig& cfg) {
    cmd->add_option("--r-min", cfg.r_min, "Smallest radius of the search schedule");
    cmd->add_option("--r-max", cfg.r_max, "Largest radius of the search schedule");
    cmd->add_option("--step", cfg.step, "Radius increment between sweep samples");
    cmd->add_option("--tol", cfg.plateau_rel_tol,
                    "Relative EC gain below which a step counts toward the plateau");
    cmd->add_option("--patience", cfg.plateau_patience,
                    "Consecutive low-gain steps that end the search");
}

void add_clahe_flags(CLI::App* cmd, morphx::ClaheParams& params) {
    cmd->add_option("--tiles-x", params.tiles_x, "CLAHE tile columns");
    cmd->add_option("--tiles-y", params.tiles_y, "CLAHE tile rows");
    cmd->add_option("--bins", params.bins, "CLAHE histogram bins");
    cmd->add_option("--clip", params.clip_limit, "CLAHE normalized clip limit in (0,1]");
}

fs::path with_stem_suffix(const fs::path& p, const std::string& suffix) {
    fs::path out = p.parent_path() / p.stem();
    out += suffix;
    out += p.extension();
    return out;
}

int cmd_enhance(const fs::path& input, const fs::path& output, int radius, bool dump_stages) {
    if (radius < 0) throw morphx::ArgumentError("radius must be >= 0");
    const morphx::GrayImage img = morphx::load_image(input);
    const morphx::EnhanceStages stages = morphx::enhance_fixed(img, morphx::make_disk(radius));
    morphx::save_image(stages.enhanced, output);
    if (dump_stages) {
        morphx::save_image(stages.tophat, with_stem_suffix(output, "_tophat"));
        morphx::save_image(stages.bottomhat, with_stem_suffix(output, "_bottomhat"));
    }
    std::cerr << "enhanced " << input.string() << " -> " << output.string()
              << " (radius " << radius << ")\n";
    return kExitOk;
}

int cmd_auto(const fs::path& input, const fs::path& output, const morphx::SearchConfig& cfg,
             const std::string& curve_path) {
    cfg.validate();
    const morphx::GrayImage img = morphx::load_image(input);
    const morphx::EnhanceResult result = morphx::auto_enhance(img, cfg);
    morphx::save_image(result.stages.enhanced, output);

    if (!curve_path.empty()) {
        std::ofstream curve(curve_path, std::ios::binary);
        if (!curve) throw morphx::IoError("cannot open " + curve_path + " for writing");
        curve << "radius,ec\n";
        for (const auto& sample : result.curve) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", sample.ec);
            curve << sample.radius << ',' << buf << '\n';
        }
        if (!curve.good()) throw morphx::IoError("write failed: " + curve_path);
    }

    json report = {{"chosen_radius", result.chosen_radius},
                   {"ec_before", result.ec_before},
                   {"ec_after", result.ec_after}};
    std::cout << report.dump() << '\n';
    return kExitOk;
}

int cmd_compare(const fs::path& input, const fs::path& outdir, const morphx::SearchConfig& cfg,
                const morphx::ClaheParams& params) {
    cfg.validate();
    const morphx::GrayImage img = morphx::load_image(input);
    const morphx::CompareResult result = morphx::compare(img, cfg, params);

    fs::create_directories(outdir);
    morphx::save_image(img, outdir / "original.png");
    morphx::save_image(result.proposed.stages.enhanced, outdir / "proposed.png");
    morphx::save_image(result.clahe_out, outdir / "clahe.png");

    json report = {{"ec_original", result.ec_original},
                   {"ec_proposed", result.ec_proposed},
                   {"ec_clahe", result.ec_clahe},
                   {"chosen_radius", result.proposed.chosen_radius}};
    std::ofstream metrics(outdir / "metrics.json", std::ios::binary);
    if (!metrics) throw morphx::IoError("cannot write " + (outdir / "metrics.json").string());
    metrics << report.dump(2) << '\n';
    std::cout << report.dump() << '\n';
    return kExitOk;
}

int cmd_metrics(const fs::path& input) {
    const morphx::GrayImage img = morphx::load_image(input);
    json report = {{"ec", morphx::edge_content(img)}};
    std::cout << report.dump() << '\n';
    return kExitOk;
}

int cmd_batch(const morphx::BatchOptions& opts, const fs::path& report_path) {
    const morphx::BatchResult result = morphx::run_batch(opts);
    morphx::write_batch_report(result, report_path);
    std::cerr << "batch: " << result.rows.size() << " processed, "
              << result.failures.size() << " failed\n";
    return result.failures.empty() ? kExitOk : kExitPartialFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morphological contrast enhancement for grayscale X-ray images"};
    app.require_subcommand(1);

    // enhance
    auto* enhance = app.add_subcommand("enhance", "Enhance with a fixed SE radius");
    fs::path enh_input, enh_output;
    int enh_radius = 0;
    bool enh_dump = false;
    enhance->add_option("input", enh_input, "Input image (PNG/TIFF/PGM)")->required();
    enhance->add_option("output", enh_output, "Output image")->required();
    enhance->add_option("--radius", enh_radius, "Disk SE radius in pixels")->required();
    enhance->add_flag("--dump-stages", enh_dump,
                      "Also write <stem>_tophat and <stem>_bottomhat images");

    // auto
    auto* auto_cmd = app.add_subcommand("auto", "Enhance with automatic SE-size selection");
    fs::path auto_input, auto_output;
    morphx::SearchConfig auto_cfg;
    std::string auto_curve;
    auto_cmd->add_option("input", auto_input, "Input image")->required();
    auto_cmd->add_option("output", auto_output, "Output image")->required();
    add_search_flags(auto_cmd, auto_cfg);
    auto_cmd->add_option("--emit-curve", auto_curve, "Write the EC curve as CSV (radius,ec)");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Compare automatic enhancement with CLAHE");
    fs::path cmp_input, cmp_outdir;
    morphx::SearchConfig cmp_cfg;
    morphx::ClaheParams cmp_params;
    compare_cmd->add_option("input", cmp_input, "Input image")->required();
    compare_cmd->add_option("outdir", cmp_outdir, "Directory for original/proposed/clahe outputs")
        ->required();
    add_search_flags(compare_cmd, cmp_cfg);
    add_clahe_flags(compare_cmd, cmp_params);

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "Print the Edge Content of an image");
    fs::path met_input;
    metrics_cmd->add_option("input", met_input, "Input image")->required();

    // batch
    auto* batch_cmd = app.add_subcommand("batch", "Enhance every image in a directory");
    morphx::BatchOptions batch_opts;
    fs::path batch_report;
    batch_cmd->add_option("input_dir", batch_opts.input_dir, "Directory of input images")
        ->required();
    batch_cmd->add_option("output_dir", batch_opts.output_dir, "Directory for enhanced images")
        ->required();
    batch_cmd->add_option("--report", batch_report, "CSV report path (default <output_dir>/report.csv)");
    batch_cmd->add_option("--jobs", batch_opts.jobs, "Worker count")->envname("MORPHX_JOBS");
    batch_cmd->add_flag("--with-clahe", batch_opts.with_clahe, "Also compute the CLAHE EC per image");
    batch_cmd->add_flag("--recursive", batch_opts.recursive, "Recurse into subdirectories");
    add_search_flags(batch_cmd, batch_opts.search);
    add_clahe_flags(batch_cmd, batch_opts.clahe_params);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgs;
    }

    try {
        if (enhance->parsed()) return cmd_enhance(enh_input, enh_output, enh_radius, enh_dump);
        if (auto_cmd->parsed()) return cmd_auto(auto_input, auto_output, auto_cfg, auto_curve);
        if (compare_cmd->parsed()) return cmd_compare(cmp_input, cmp_outdir, cmp_cfg, cmp_params);
        if (metrics_cmd->parsed()) return cmd_metrics(met_input);
        if (batch_cmd->parsed()) {
            fs::path report = batch_report.empty() ? batch_opts.output_dir / "report.csv"
                                                   : batch_report;
            return cmd_batch(batch_opts, report);
        }
    } catch (const morphx::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitArgs;
}
