// Regenerates the committed synthetic X-ray assets from their closed-form
// definitions. Output is deterministic; re-running must reproduce the files
// in assets/ byte for byte.

#include <filesystem>
#include <iostream>

#include "morphx/io.hpp"
#include "morphx/synthetic.hpp"

int main(int argc, char** argv) {
    namespace fs = std::filesystem;
    const fs::path outdir = argc > 1 ? fs::path(argv[1]) : fs::path("assets");
    try {
        fs::create_directories(outdir);
        morphx::save_image(morphx::synthetic::dental_asset(), outdir / "dental_synthetic.png");
        morphx::save_image(morphx::synthetic::chest_asset(), outdir / "chest_synthetic.png");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout << "wrote " << (outdir / "dental_synthetic.png").string() << " and "
              << (outdir / "chest_synthetic.png").string() << '\n';
    return 0;
}
