#pragma once

#include <cmath>
#include <utility>

#include "physarum/error.hpp"
#include "physarum/grid.hpp"

namespace physarum {

// Chemoattractant concentration per cell, arbitrary units. Values may go
// negative where repellents project.
using TrailField = Grid<double>;

// Mean-filter diffusion settings, validated once at configuration time.
struct DiffusionKernel {
    int window;      // odd, >= 3
    double damping;  // in [0, 1]

    DiffusionKernel(int window_, double damping_) : window(window_), damping(damping_) {
        if (window < 3 || window % 2 == 0)
            throw ConfigError("D_w must be an odd integer >= 3, got " +
                              std::to_string(window));
        if (!(damping >= 0.0 && damping <= 1.0))
            throw ConfigError("D_d must lie in [0, 1], got " + std::to_string(damping));
    }
};

// One synchronous diffusion step: every cell becomes the mean of its
// window x window neighbourhood scaled by (1 - damping). Cells outside the
// lattice read as 0 and the divisor stays window^2, so trail leaks at the
// edges. All reads come from `src`; `dst` and `row_sums` are resized as
// needed and may not alias `src`.
inline void diffuse(const TrailField& src, TrailField& dst, TrailField& row_sums,
                    const DiffusionKernel& kernel) {
    const int w = src.width();
    const int h = src.height();
    const int half = kernel.window / 2;
    if (dst.width() != w || dst.height() != h) dst = TrailField(w, h);
    if (row_sums.width() != w || row_sums.height() != h) row_sums = TrailField(w, h);

    // Horizontal pass: windowed sums along each row. Direct short sums keep
    // the arithmetic exact for uniform inputs (no running-sum drift).
    for (int y = 0; y < h; ++y) {
        const double* in = src.row(y);
        double* out = row_sums.row(y);
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            const int x0 = std::max(0, x - half);
            const int x1 = std::min(w - 1, x + half);
            for (int xi = x0; xi <= x1; ++xi) s += in[xi];
            out[x] = s;
        }
    }

    const double divisor = static_cast<double>(kernel.window) * kernel.window;
    const double scale = 1.0 - kernel.damping;
    for (int y = 0; y < h; ++y) {
        double* out = dst.row(y);
        const int y0 = std::max(0, y - half);
        const int y1 = std::min(h - 1, y + half);
        for (int x = 0; x < w; ++x) out[x] = 0.0;
        for (int yi = y0; yi <= y1; ++yi) {
            const double* in = row_sums.row(yi);
            for (int x = 0; x < w; ++x) out[x] += in[x];
        }
        for (int x = 0; x < w; ++x) out[x] = (out[x] / divisor) * scale;
    }
}

inline TrailField diffused(const TrailField& src, const DiffusionKernel& kernel) {
    TrailField dst, scratch;
    diffuse(src, dst, scratch, kernel);
    return dst;
}

}  // namespace physarum
