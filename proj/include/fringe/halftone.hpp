#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fringe/grid.hpp"
#include "fringe/optics.hpp"

namespace fringe {

// Each sample is 1 with probability equal to its contone intensity.
// Deterministic under seed; samples drawn frame-major, then row-major.
PatternSet white_noise_dither(const PatternSet& contone, uint64_t seed);

// Recursive index matrix, row-major M*M, B2 = [[0,2],[3,1]].
std::vector<int> bayer_matrix(int order);

// bit = 1 iff intensity > (B[y mod M][x mod M] + 0.5) / M^2.
PatternSet bayer_dither(const PatternSet& contone, int order);

// One accepted move inside spatial_dbs, reported to the observer.
struct DbsMove {
    int frame = 0;
    int x = 0, y = 0;     // scanned pixel
    bool toggle = true;   // false: swap with (nx, ny)
    int nx = 0, ny = 0;
    double delta = 0.0;   // exact change in the frame's filtered error
};

struct DbsConfig {
    Kernel kernel;
    int max_passes = 30; // also stops when a full pass accepts no move
    std::function<void(const DbsMove&)> observer = {}; // optional, per accepted move
    std::function<void(int frame, int pass, long accepted)> pass_observer = {}; // optional
};

// Classic direct-binary-search halftoning, each frame independent.
// Error metric per frame: sum over pixels of [kernel (*) (binary - contone)]^2
// under toroidal convolution. Raster scan; at each pixel the candidate moves
// are a toggle and swaps with the 8 toroidal neighbors; the single move with
// the largest strictly-positive error reduction is applied immediately.
// Ties prefer the toggle, then the lowest neighbor index. Seeded from
// white_noise_dither.
PatternSet spatial_dbs(const PatternSet& contone, const DbsConfig& cfg, uint64_t seed);

// The spatial_dbs objective, per frame.
std::vector<double> dbs_error(const PatternSet& binary, const PatternSet& contone,
                              const Kernel& kernel);

} // namespace fringe
