#include "fringe/suites.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "fringe/decode.hpp"
#include "fringe/halftone.hpp"
#include "fringe/patterns.hpp"
#include "fringe/phase_dbs.hpp"

namespace fringe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ErrorReport eval_binary(const PatternSet& binary, const Kernel& kernel,
                        const Grid& truth, int k) {
    const SpectralField f = dft_pixelwise(defocus_set(binary, kernel));
    return wrapped_abs_error(phase_map(f, k).degrees, truth);
}

void log_cell(std::ostream* log, const SuiteCell& cell, const char* unit) {
    if (!log) return;
    *log << "  " << std::left << std::setw(26) << cell.name
         << "reference " << std::setw(8) << cell.reference
         << "measured " << std::fixed << std::setprecision(4) << cell.measured
         << std::defaultfloat << std::setprecision(6) << " " << unit << "\n";
}

PatternSet repeat_rows(const PatternSet& tile, int copies) {
    PatternSet out;
    out.frames.reserve(tile.frames.size());
    for (const auto& f : tile.frames) {
        Grid tall(f.width(), f.height() * copies);
        for (int c = 0; c < copies; ++c)
            for (int y = 0; y < f.height(); ++y)
                for (int x = 0; x < f.width(); ++x)
                    tall.at(x, c * f.height() + y) = f.at(x, y);
        out.frames.push_back(std::move(tall));
    }
    return out;
}

Grid repeat_rows(const Grid& tile, int copies) {
    Grid tall(tile.width(), tile.height() * copies);
    for (int c = 0; c < copies; ++c)
        for (int y = 0; y < tile.height(); ++y)
            for (int x = 0; x < tile.width(); ++x)
                tall.at(x, c * tile.height() + y) = tile.at(x, y);
    return tall;
}

} // namespace

Table1Result run_table1(uint64_t seed, std::ostream* log) {
    const auto t0 = Clock::now();
    Table1Result result;

    const Kernel kernel = gaussian_kernel(15, 2.0);

    // single frequency: metric is the unit-frequency phase (bin 1)
    {
        const PatternSpec spec{PatternMode::Single, 8, 80, 480};
        const PatternSet contone = make_patterns(spec);
        const Grid truth = ideal_phase_map(spec, 1);

        result.seed_mae_single =
            eval_binary(white_noise_dither(contone, seed), kernel, truth, 1).mae_deg;
        if (log)
            *log << "single frequency, 8 frames, 80x480, 15x15 kernel sigma 2\n"
                 << "  white-noise seed          reference " << std::setw(8) << kRefSeedMae
                 << "measured " << std::fixed << std::setprecision(4)
                 << result.seed_mae_single << std::defaultfloat << std::setprecision(6)
                 << " deg MAE\n";

        const PatternSet dbs = spatial_dbs(contone, {kernel}, seed);
        result.cells.push_back({"single spatial DBS", kRefSingleSpatialMae,
                                eval_binary(dbs, kernel, truth, 1).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");

        OptimizeConfig cfg{kernel, make_weights(WeightPreset::All, 8)};
        cfg.seed = seed;
        const auto all_run = optimize(contone, cfg);
        result.cells.push_back({"single phase DBS (all)", kRefSingleAllMae,
                                eval_binary(all_run.first, kernel, truth, 1).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");

        cfg.weights = make_weights(WeightPreset::K1, 8);
        const auto k1_run = optimize(contone, cfg);
        result.cells.push_back({"single phase DBS (k1)", kRefSingleK1Mae,
                                eval_binary(k1_run.first, kernel, truth, 1).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");

        result.k1_power = residual_power(contone, k1_run.first, kernel);
    }
    result.single_duration_s = seconds_since(t0);

    // dual frequency: metric is the high-frequency phase (bin 2)
    {
        const PatternSpec spec{PatternMode::Dual, 8, 80, 480, 8};
        const PatternSet contone = make_patterns(spec);
        const Grid truth = ideal_phase_map(spec, 2);

        if (log) *log << "dual frequency, 8 frames, 80x480, high-frequency bin\n";

        const PatternSet dbs = spatial_dbs(contone, {kernel}, seed);
        result.cells.push_back({"dual spatial DBS", kRefDualSpatialMae,
                                eval_binary(dbs, kernel, truth, 2).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");

        OptimizeConfig cfg{kernel, make_weights(WeightPreset::All, 8)};
        cfg.seed = seed;
        cfg.target_bins = {2};
        const auto all_run = optimize(contone, cfg);
        result.cells.push_back({"dual phase DBS (all)", kRefDualAllMae,
                                eval_binary(all_run.first, kernel, truth, 2).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");

        cfg.weights = make_weights(WeightPreset::K12, 8);
        const auto k12_run = optimize(contone, cfg);
        result.cells.push_back({"dual phase DBS (k12)", kRefDualK12Mae,
                                eval_binary(k12_run.first, kernel, truth, 2).mae_deg});
        log_cell(log, result.cells.back(), "deg MAE");
    }

    result.duration_s = seconds_since(t0);
    if (log)
        *log << "completed in " << std::fixed << std::setprecision(1) << result.duration_s
             << std::defaultfloat << std::setprecision(6) << " s\n";
    return result;
}

DaiResult run_dai(uint64_t seed, std::ostream* log) {
    const auto t0 = Clock::now();
    DaiResult result;

    const PatternSpec tile_spec{PatternMode::Single, 8, 80, 32};
    const int periods = 15; // 480 rows total
    const PatternSet contone = repeat_rows(make_patterns(tile_spec), periods);
    const Grid truth = repeat_rows(ideal_phase_map(tile_spec, 1), periods);
    const Kernel kernel = gaussian_kernel(5, std::sqrt(5.0 / 3.0));

    result.bayer_rms =
        eval_binary(bayer_dither(contone, result.bayer_order), kernel, truth, 1).rms_rad;
    result.dbs_rms = eval_binary(spatial_dbs(contone, {kernel}, seed), kernel, truth, 1).rms_rad;

    OptimizeConfig cfg{kernel, make_weights(WeightPreset::K1, 8)};
    cfg.seed = seed;
    const auto phase_run = optimize(contone, cfg);
    result.phase_rms = eval_binary(phase_run.first, kernel, truth, 1).rms_rad;

    result.duration_s = seconds_since(t0);
    if (log) {
        *log << "32-row period, 8 frames, 80x" << 32 * periods
             << ", 5x5 kernel sigma^2 = 5/3, RMS radians\n";
        SuiteCell c1{"Bayer (order 8)", kRefDaiBayerRms, result.bayer_rms};
        SuiteCell c2{"spatial DBS", kRefDaiDbsRms, result.dbs_rms};
        SuiteCell c3{"phase DBS (k1)", kRefDaiPhaseRms, result.phase_rms};
        log_cell(log, c1, "rad RMS");
        log_cell(log, c2, "rad RMS");
        log_cell(log, c3, "rad RMS");
        *log << "completed in " << std::fixed << std::setprecision(1) << result.duration_s
             << std::defaultfloat << std::setprecision(6) << " s\n";
    }
    return result;
}

} // namespace fringe
