#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fringe/dft.hpp"
#include "fringe/grid.hpp"
#include "fringe/optics.hpp"

namespace fringe {

enum class WeightPreset { All, K1, K12 };

std::string to_string(WeightPreset p);
WeightPreset weight_preset_from_string(const std::string& s);

// ALL: w_k = 1 for every k. K1: w_1 = 1. K12: w_1 = w_2 = 1.
// Conjugate symmetry already makes bin N-k's error track bin k's, so the
// presets never add a mirrored weight.
std::vector<double> make_weights(WeightPreset p, int frames);

enum class SolverMode { Exhaustive, Threshold };

std::string to_string(SolverMode m);
SolverMode solver_mode_from_string(const std::string& s);

// Per-pixel light contributed by neighbors only: component n is the toroidal
// convolution of frame n with the center-zeroed kernel, evaluated at (x, y).
std::vector<double> surround_vector(const PatternSet& binary, const Kernel& surround,
                                    int x, int y);

// DFT(contone_vec) - DFT(surround_vec); the spectrum the pixel's own bits,
// scaled by the center weight, should supply.
std::vector<Cplx> spectral_difference(std::span<const double> contone_vec,
                                      std::span<const double> surround_vec);

// argmin over all 2^N bit vectors of sum_k w_k |d[k] - c * DFT(bits)[k]|^2.
// Ties resolve to the numerically smallest pattern (bit 0 = frame 0 = LSB).
uint32_t best_binary_exhaustive(std::span<const Cplx> d, double center_weight,
                                std::span<const double> weights);

// bit n = 1 iff the inverse DFT of d is strictly positive at sample n.
// Weight-independent closed form; cheaper but not exactly optimal.
uint32_t best_binary_threshold(std::span<const Cplx> d);

struct OptimizeConfig {
    Kernel kernel;
    std::vector<double> weights;
    SolverMode mode = SolverMode::Exhaustive;
    int max_passes = 30;
    int min_flips = 0; // stop when a pass flips fewer bits than this
    uint64_t seed = 1;
    std::vector<int> target_bins{1}; // progress-metric bins
};

struct PassRecord {
    int pass = 0;       // 1-based
    long flips = 0;     // bits changed during the pass
    double mae_deg = 0; // mean absolute phase error on the target bins
    double cost = 0;    // weighted mean residual spectral power
};

struct OptimizationTrace {
    std::vector<PassRecord> passes;
    int best_pass = 0; // pass whose snapshot is returned
};

// Jointly re-binarizes all N frames pixel by pixel so the defocused set's
// per-pixel spectrum tracks the contone ideal under the given weights.
// Seeds from white_noise_dither, scans in raster order with in-place updates,
// and returns the snapshot of the pass with the lowest progress-metric error.
std::pair<PatternSet, OptimizationTrace> optimize(const PatternSet& contone,
                                                  const OptimizeConfig& cfg);

} // namespace fringe
