#include "morphx/morphology.hpp"

#include <cstring>
#include <limits>
#include <string>

namespace morphx {

DiskSE make_disk(int radius) {
    if (radius < 0) {
        throw ArgumentError("disk radius must be non-negative, got " +
                            std::to_string(radius));
    }
    DiskSE se;
    se.radius = radius;
    se.chord_half_width.assign(2 * radius + 1, 0);
    const long long rr = static_cast<long long>(radius) * radius;
    for (int dy = -radius; dy <= radius; ++dy) {
        int half = 0;
        for (int dx = -radius; dx <= radius; ++dx) {
            if (static_cast<long long>(dx) * dx + static_cast<long long>(dy) * dy <= rr) {
                se.offsets.emplace_back(dx, dy);
                if (dx > half) half = dx;
            }
        }
        se.chord_half_width[dy + radius] = half;
    }
    return se;
}

namespace {

template <bool kMax>
inline float pick(float a, float b) {
    if constexpr (kMax) {
        return a > b ? a : b;
    } else {
        return a < b ? a : b;
    }
}

template <bool kMax>
inline bool strictly_better(float a, float b) {
    if constexpr (kMax) {
        return a > b;
    } else {
        return a < b;
    }
}

template <bool kMax>
GrayImage extremum_naive(const GrayImage& img, const DiskSE& se) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            float best = img.at_clamped(x + se.offsets.front().first,
                                        y + se.offsets.front().second);
            for (const auto& [dx, dy] : se.offsets) {
                best = pick<kMax>(best, img.at_clamped(x + dx, y + dy));
            }
            out.at(x, y) = best;
        }
    }
    return out;
}

// Sliding extremum over row[x+margin-halfwin .. x+margin+halfwin] for each
// output x in [0, out_n). Monotone wedge of candidate indices, O(n) per row.
template <bool kMax>
void sliding_extremum(const float* row, int n, int halfwin, int margin,
                      float* out, int out_n, int* wedge) {
    if (halfwin == 0) {
        std::memcpy(out, row + margin, static_cast<std::size_t>(out_n) * sizeof(float));
        return;
    }
    int head = 0, tail = 0;
    for (int j = 0; j < n; ++j) {
        // Drop candidates the newcomer dominates.
        while (tail > head && !strictly_better<kMax>(row[wedge[tail - 1]], row[j])) --tail;
        wedge[tail++] = j;
        const int center = j - halfwin;
        while (wedge[head] < center - halfwin) ++head;
        const int x = center - margin;
        if (x >= 0 && x < out_n) out[x] = row[wedge[head]];
    }
}

template <bool kMax>
GrayImage extremum_chord(const GrayImage& img, const DiskSE& se) {
    const int r = se.radius;
    if (r == 0) return img;

    const int w = img.width(), h = img.height();
    const int pw = w + 2 * r, ph = h + 2 * r;

    std::vector<float> padded(static_cast<std::size_t>(pw) * ph);
    for (int py = 0; py < ph; ++py) {
        for (int px = 0; px < pw; ++px) {
            padded[static_cast<std::size_t>(py) * pw + px] = img.at_clamped(px - r, py - r);
        }
    }

    // Group disk rows sharing a chord half-width so each horizontal pass is
    // computed once per width and reused for every matching dy.
    std::vector<std::vector<int>> dys_by_width(r + 1);
    for (int dy = -r; dy <= r; ++dy) {
        dys_by_width[se.chord_half_width[dy + r]].push_back(dy);
    }

    constexpr float kInit = kMax ? -std::numeric_limits<float>::infinity()
                                 : std::numeric_limits<float>::infinity();
    GrayImage out(w, h, kInit);
    std::vector<float> rowext(static_cast<std::size_t>(ph) * w);
    std::vector<int> wedge(pw);

    for (int cw = 0; cw <= r; ++cw) {
        if (dys_by_width[cw].empty()) continue;
        for (int py = 0; py < ph; ++py) {
            sliding_extremum<kMax>(padded.data() + static_cast<std::size_t>(py) * pw, pw,
                                   cw, r, rowext.data() + static_cast<std::size_t>(py) * w,
                                   w, wedge.data());
        }
        for (int dy : dys_by_width[cw]) {
            for (int y = 0; y < h; ++y) {
                const float* src = rowext.data() + static_cast<std::size_t>(y + r + dy) * w;
                float* dst = out.row(y);
                for (int x = 0; x < w; ++x) dst[x] = pick<kMax>(dst[x], src[x]);
            }
        }
    }
    return out;
}

template <bool kMax>
GrayImage extremum(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    if (img.empty()) throw ArgumentError("morphology on empty image");
    return kernel == MorphKernel::Naive ? extremum_naive<kMax>(img, se)
                                        : extremum_chord<kMax>(img, se);
}

} // namespace

GrayImage erode(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return extremum<false>(img, se, kernel);
}

GrayImage dilate(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return extremum<true>(img, se, kernel);
}

GrayImage open(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return dilate(erode(img, se, kernel), se, kernel);
}

GrayImage close(const GrayImage& img, const DiskSE& se, MorphKernel kernel) {
    return erode(dilate(img, se, kernel), se, kernel);
}

} // namespace morphx
