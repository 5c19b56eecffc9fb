#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fringe/grid.hpp"

namespace fringe {

// Published reference values the comparison suites print alongside their
// own measurements.
inline constexpr double kRefSingleSpatialMae = 0.43;
inline constexpr double kRefSingleAllMae = 0.44;
inline constexpr double kRefSingleK1Mae = 0.10;
inline constexpr double kRefDualSpatialMae = 0.75;
inline constexpr double kRefDualAllMae = 0.87;
inline constexpr double kRefDualK12Mae = 0.44;
inline constexpr double kRefSeedMae = 2.79;
inline constexpr double kRefDaiBayerRms = 0.047;
inline constexpr double kRefDaiDbsRms = 0.027;
inline constexpr double kRefDaiPhaseRms = 0.014;

struct SuiteCell {
    std::string name;
    double reference = 0.0;
    double measured = 0.0;
};

// Six-cell comparison: {spatial DBS, phase ALL, phase K1} x single frequency
// and {spatial DBS, phase ALL, phase K12} x dual frequency, N=8, 80x480,
// 15x15 sigma=2 kernel, mean absolute phase error in degrees.
struct Table1Result {
    std::vector<SuiteCell> cells;
    double seed_mae_single = 0.0;     // white-noise seed error before optimization
    std::vector<double> k1_power;     // per-bin residual power of the K1 run
    double single_duration_s = 0.0;   // single-frequency cells only
    double duration_s = 0.0;
};

Table1Result run_table1(uint64_t seed, std::ostream* log);

// Ordered dither vs spatial DBS vs phase-weighted optimization on the
// 32-row-period setup (N=8, 80 wide, 15 vertical periods, 5x5 kernel with
// sigma^2 = 5/3), reported as RMS phase error in radians.
struct DaiResult {
    double bayer_rms = 0.0;
    double dbs_rms = 0.0;
    double phase_rms = 0.0;
    int bayer_order = 8;
    double duration_s = 0.0;
};

DaiResult run_dai(uint64_t seed, std::ostream* log);

} // namespace fringe
