#pragma once

#include <vector>

#include "fringe/dft.hpp"
#include "fringe/grid.hpp"
#include "fringe/optics.hpp"

namespace fringe {

// Magnitudes below this are treated as undefined phase.
inline constexpr double kPhaseQualityThreshold = 1e-9;

struct PhaseMap {
    Grid degrees; // wrapped to [0, 360)
    Grid valid;   // 1 where bin magnitude >= threshold, else 0 (phase forced to 0)
};

PhaseMap phase_map(const SpectralField& field, int k);

// Per-pixel magnitude of bin k; scaled=true divides by N/2 to recover the
// modulation amplitude in intensity units.
Grid magnitude_map(const SpectralField& field, int k, bool scaled = false);

struct ErrorReport {
    Grid error_map;     // wrapped absolute error, degrees in [0, 180]
    double mae_deg = 0;
    double rms_rad = 0;
};

// e = |((measured - truth + 180) mod 360) - 180| per pixel. A mask grid
// (nonzero = keep) restricts the statistics; pass nullptr for all pixels.
ErrorReport wrapped_abs_error(const Grid& measured, const Grid& truth,
                              const Grid* mask = nullptr);

// Per-bin mean of |DFT(contone) - DFT(defocused binary)|^2 / N^2, the
// residual spectral power in intensity^2 units.
std::vector<double> residual_power(const PatternSet& contone, const PatternSet& binary,
                                   const Kernel& kernel);

// Wrapped forward difference along rows, degrees per pixel (toroidal).
Grid gradient_map(const Grid& phase_deg);

// Linear remap of gradient degrees to [0,1] for image export.
Grid gradient_render(const Grid& gradient);

} // namespace fringe
