#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fringe/grid.hpp"

namespace fringe {

// 8-bit binary portable graymap. Values are written as round(255 * v),
// so binary {0,1} grids round-trip losslessly and contone grids round-trip
// within 1/255.
void write_pgm(const std::filesystem::path& path, const Grid& grid);
Grid read_pgm(const std::filesystem::path& path);

// 8-bit binary portable pixmap from an interleaved RGB buffer.
void write_ppm(const std::filesystem::path& path, int width, int height,
               const std::vector<uint8_t>& rgb);

// Pseudo-color helpers for exports: a hue wheel over [0,360) degrees and a
// plain grayscale ramp over [0,1].
std::vector<uint8_t> phase_to_rgb(const Grid& phase_deg);
std::vector<uint8_t> unit_to_rgb(const Grid& values01);

} // namespace fringe
