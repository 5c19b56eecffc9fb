#pragma once

#include <string>
#include <vector>

#include "fringe/grid.hpp"

namespace fringe {

enum class PatternMode { Single, Dual };

std::string to_string(PatternMode m);
PatternMode pattern_mode_from_string(const std::string& s);

// Geometry of a phase-shifted sinusoid set. Intensity varies with the row
// coordinate only; frames differ by their temporal shift n/N.
struct PatternSpec {
    PatternMode mode = PatternMode::Single;
    int frames = 8;
    int width = 80;
    int height = 480;
    int f_high = 8; // high-frequency multiplier, dual mode only

    void validate() const;
};

// frame n: single  I[n] = 1/2 + 1/2 cos(2 pi (n/N - y))
//          dual    I[n] = 1/2 + 1/4 cos(2 pi (n/N - y)) + 1/4 cos(2 pi (2n/N - f_high y))
// with y = row / height.
PatternSet make_patterns(const PatternSpec& spec);

// Ground-truth wrapped phase per row, degrees in [0, 360).
// k = 1: unit frequency (both modes); k = 2: high frequency (dual only).
std::vector<double> ideal_phase(const PatternSpec& spec, int k);

// Same, expanded to a full grid (every column identical).
Grid ideal_phase_map(const PatternSpec& spec, int k);

// Side-by-side horizontal replication of every frame (e.g. 80 -> 640 wide).
PatternSet tile_horizontal(const PatternSet& set, int copies);

} // namespace fringe
