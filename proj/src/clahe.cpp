#include "morphx/clahe.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace morphx {

void ClaheParams::validate(int image_width, int image_height) const {
    if (tiles_x < 1 || tiles_y < 1) {
        throw ArgumentError("tile grid must be at least 1x1, got " +
                            std::to_string(tiles_x) + "x" + std::to_string(tiles_y));
    }
    if (bins < 2) throw ArgumentError("bins must be >= 2, got " + std::to_string(bins));
    if (!(clip_limit > 0.0) || clip_limit > 1.0) {
        throw ArgumentError("clip_limit must be in (0, 1]");
    }
    if (image_width < tiles_x || image_height < tiles_y) {
        throw ArgumentError("image " + std::to_string(image_width) + "x" +
                            std::to_string(image_height) + " is smaller than the " +
                            std::to_string(tiles_x) + "x" + std::to_string(tiles_y) +
                            " tile grid");
    }
}

namespace {

inline int bin_of(float v, int bins) {
    const int b = static_cast<int>(static_cast<double>(v) * bins / 256.0);
    return std::clamp(b, 0, bins - 1);
}

// Clip the histogram at `limit` and spread the excess uniformly, iterating
// until the residual per bin drops below one count (capped to stay finite on
// degenerate limits).
void clip_and_redistribute(std::vector<double>& hist, double limit) {
    const double bins = static_cast<double>(hist.size());
    for (int iter = 0; iter < 64; ++iter) {
        double excess = 0.0;
        for (double& h : hist) {
            if (h > limit) {
                excess += h - limit;
                h = limit;
            }
        }
        if (excess <= 0.0) break;
        const double per_bin = excess / bins;
        for (double& h : hist) h += per_bin;
        if (per_bin < 1.0) break;
    }
}

struct TileGrid {
    std::vector<int> x0, x1; // tile column bounds [x0, x1)
    std::vector<int> y0, y1;
    std::vector<double> cx, cy; // tile centers
};

TileGrid make_grid(int w, int h, int tiles_x, int tiles_y) {
    TileGrid g;
    g.x0.resize(tiles_x);
    g.x1.resize(tiles_x);
    g.cx.resize(tiles_x);
    for (int i = 0; i < tiles_x; ++i) {
        g.x0[i] = static_cast<int>(static_cast<long long>(i) * w / tiles_x);
        g.x1[i] = static_cast<int>(static_cast<long long>(i + 1) * w / tiles_x);
        g.cx[i] = (g.x0[i] + g.x1[i] - 1) / 2.0;
    }
    g.y0.resize(tiles_y);
    g.y1.resize(tiles_y);
    g.cy.resize(tiles_y);
    for (int j = 0; j < tiles_y; ++j) {
        g.y0[j] = static_cast<int>(static_cast<long long>(j) * h / tiles_y);
        g.y1[j] = static_cast<int>(static_cast<long long>(j + 1) * h / tiles_y);
        g.cy[j] = (g.y0[j] + g.y1[j] - 1) / 2.0;
    }
    return g;
}

// Index pair and blend weight along one axis: centers bracket the coordinate,
// replicating beyond the first/last tile center.
void locate(const std::vector<double>& centers, double coord, int& lo, int& hi, double& t) {
    const int n = static_cast<int>(centers.size());
    if (coord <= centers.front()) {
        lo = hi = 0;
        t = 0.0;
        return;
    }
    if (coord >= centers.back()) {
        lo = hi = n - 1;
        t = 0.0;
        return;
    }
    lo = 0;
    while (lo + 1 < n && centers[lo + 1] <= coord) ++lo;
    hi = lo + 1;
    t = (coord - centers[lo]) / (centers[hi] - centers[lo]);
}

} // namespace

GrayImage clahe(const GrayImage& img, const ClaheParams& params) {
    params.validate(img.width(), img.height());
    const int w = img.width(), h = img.height();
    const int tx = params.tiles_x, ty = params.tiles_y;
    const int bins = params.bins;

    const TileGrid grid = make_grid(w, h, tx, ty);

    // Per-tile equalization mapping from the clipped CDF: bin -> [0, 255].
    std::vector<std::vector<double>> maps(static_cast<std::size_t>(tx) * ty);
    for (int j = 0; j < ty; ++j) {
        for (int i = 0; i < tx; ++i) {
            std::vector<double> hist(bins, 0.0);
            for (int y = grid.y0[j]; y < grid.y1[j]; ++y) {
                for (int x = grid.x0[i]; x < grid.x1[i]; ++x) {
                    hist[bin_of(img.at(x, y), bins)] += 1.0;
                }
            }
            const double npix = static_cast<double>(grid.x1[i] - grid.x0[i]) *
                                (grid.y1[j] - grid.y0[j]);
            clip_and_redistribute(hist, params.clip_limit * npix);

            std::vector<double> map(bins);
            double cdf = 0.0;
            for (int b = 0; b < bins; ++b) {
                cdf += hist[b];
                map[b] = 255.0 * cdf / npix;
            }
            maps[static_cast<std::size_t>(j) * tx + i] = std::move(map);
        }
    }

    std::vector<int> ilo(w), ihi(w);
    std::vector<double> tu_of(w);
    for (int x = 0; x < w; ++x) locate(grid.cx, x, ilo[x], ihi[x], tu_of[x]);

    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        int jlo, jhi;
        double tv;
        locate(grid.cy, y, jlo, jhi, tv);
        for (int x = 0; x < w; ++x) {
            const double tu = tu_of[x];
            const int b = bin_of(img.at(x, y), bins);
            const double m00 = maps[static_cast<std::size_t>(jlo) * tx + ilo[x]][b];
            const double m01 = maps[static_cast<std::size_t>(jlo) * tx + ihi[x]][b];
            const double m10 = maps[static_cast<std::size_t>(jhi) * tx + ilo[x]][b];
            const double m11 = maps[static_cast<std::size_t>(jhi) * tx + ihi[x]][b];
            const double top = m00 + tu * (m01 - m00);
            const double bottom = m10 + tu * (m11 - m10);
            out.at(x, y) = static_cast<float>(top + tv * (bottom - top));
        }
    }
    return out;
}

CompareResult compare(const GrayImage& img, const SearchConfig& cfg,
                      const ClaheParams& params) {
    CompareResult result;
    result.ec_original = edge_content(img);
    result.proposed = auto_enhance(img, cfg);
    result.ec_proposed = result.proposed.ec_after;
    result.clahe_out = clahe(img, params);
    result.ec_clahe = edge_content(result.clahe_out);
    return result;
}

} // namespace morphx
