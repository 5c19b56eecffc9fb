#pragma once

#include <vector>

#include "fringe/grid.hpp"

namespace fringe {

// Square FIR kernel with odd side. Taps are row-major over offsets
// (dy, dx) in [-radius, radius]^2.
struct Kernel {
    int size = 1;
    double sigma = 0.0; // generating sigma, kept for manifests
    std::vector<double> taps{1.0};

    int radius() const { return size / 2; }

    double tap(int dx, int dy) const {
        return taps[static_cast<size_t>(dy + radius()) * size + (dx + radius())];
    }
    double& tap(int dx, int dy) {
        return taps[static_cast<size_t>(dy + radius()) * size + (dx + radius())];
    }

    double center() const { return tap(0, 0); }

    double tap_sum() const;
    double tap_energy() const; // sum of squared taps
};

// tap(dx,dy) proportional to exp(-(dx^2+dy^2)/(2 sigma^2)), normalized to sum 1.
Kernel gaussian_kernel(int size, double sigma);

struct SurroundSplit {
    Kernel surround;      // center tap forced to exactly 0
    double center_weight; // the removed tap
};
SurroundSplit split_center(const Kernel& k);

// output(p) = sum_o tap(o) * grid((p - o) mod dims), wrapping both axes.
// Non-center taps accumulate in scan order and the center contribution is
// added last, so convolving with a kernel and with its surround+center
// split produces bitwise-identical sums.
Grid convolve_toroidal(const Grid& grid, const Kernel& k);

PatternSet defocus_set(const PatternSet& set, const Kernel& k);

} // namespace fringe
