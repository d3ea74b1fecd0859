#include "morphx/metrics.hpp"

#include <cmath>
#include <string>

namespace morphx {

namespace {
constexpr double kPlateauEps = 1e-12;
}

void SearchConfig::validate() const {
    if (r_min < 1) throw ArgumentError("r_min must be >= 1, got " + std::to_string(r_min));
    if (r_max < r_min) {
        throw ArgumentError("r_max (" + std::to_string(r_max) + ") must be >= r_min (" +
                            std::to_string(r_min) + ")");
    }
    if (step < 1) throw ArgumentError("step must be >= 1, got " + std::to_string(step));
    if (!(plateau_rel_tol > 0)) throw ArgumentError("plateau_rel_tol must be > 0");
    if (plateau_patience < 1) throw ArgumentError("plateau_patience must be >= 1");
}

GradientField gradient_field(const GrayImage& img) {
    const int w = img.width(), h = img.height();
    if (w < 2 || h < 2) {
        throw ArgumentError("gradient_field needs an image of at least 2x2, got " +
                            std::to_string(w) + "x" + std::to_string(h));
    }
    GradientField g;
    g.width = w;
    g.height = h;
    g.gx.resize(static_cast<std::size_t>(w) * h);
    g.gy.resize(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            double dx;
            if (x == 0) {
                dx = static_cast<double>(img.at(1, y)) - img.at(0, y);
            } else if (x == w - 1) {
                dx = static_cast<double>(img.at(w - 1, y)) - img.at(w - 2, y);
            } else {
                dx = (static_cast<double>(img.at(x + 1, y)) - img.at(x - 1, y)) / 2.0;
            }
            double dy;
            if (y == 0) {
                dy = static_cast<double>(img.at(x, 1)) - img.at(x, 0);
            } else if (y == h - 1) {
                dy = static_cast<double>(img.at(x, h - 1)) - img.at(x, h - 2);
            } else {
                dy = (static_cast<double>(img.at(x, y + 1)) - img.at(x, y - 1)) / 2.0;
            }
            g.gx[i] = dx;
            g.gy[i] = dy;
        }
    }
    return g;
}

double edge_content(const GrayImage& img) {
    const GradientField g = gradient_field(img);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.gx.size(); ++i) {
        sum += std::sqrt(g.gx[i] * g.gx[i] + g.gy[i] * g.gy[i]);
    }
    return sum / static_cast<double>(g.gx.size());
}

EcCurve ec_sweep(const GrayImage& img, const SearchConfig& cfg) {
    cfg.validate();
    EcCurve curve;
    int low_gain_run = 0;
    for (int radius = cfg.r_min; radius <= cfg.r_max; radius += cfg.step) {
        const double ec = edge_content(enhance_fixed(img, make_disk(radius)).enhanced);
        if (!curve.empty()) {
            const double prev = curve.back().ec;
            const double gain = (ec - prev) / std::max(prev, kPlateauEps);
            low_gain_run = gain < cfg.plateau_rel_tol ? low_gain_run + 1 : 0;
        }
        curve.push_back({radius, ec});
        if (low_gain_run >= cfg.plateau_patience) break;
    }
    return curve;
}

int select_se(const EcCurve& curve, const SearchConfig& cfg) {
    cfg.validate();
    if (curve.empty()) throw ArgumentError("select_se on an empty curve");
    const int n = static_cast<int>(curve.size());
    for (int k = 0; k + cfg.plateau_patience < n; ++k) {
        bool plateau = true;
        for (int i = k; i < k + cfg.plateau_patience; ++i) {
            const double gain =
                (curve[i + 1].ec - curve[i].ec) / std::max(curve[i].ec, kPlateauEps);
            if (gain >= cfg.plateau_rel_tol) {
                plateau = false;
                break;
            }
        }
        if (plateau) return curve[k].radius;
    }
    // No plateau: largest EC wins, earliest radius on ties.
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (curve[i].ec > curve[best].ec) best = i;
    }
    return curve[best].radius;
}

EnhanceResult auto_enhance(const GrayImage& img, const SearchConfig& cfg) {
    EnhanceResult result;
    result.ec_before = edge_content(img);
    result.curve = ec_sweep(img, cfg);
    result.chosen_radius = select_se(result.curve, cfg);
    result.stages = enhance_fixed(img, make_disk(result.chosen_radius));
    result.ec_after = edge_content(result.stages.enhanced);
    return result;
}

} // namespace morphx
