// Command-line front end: generate pattern sets, halftone them, simulate
// defocus and decode phase, and re-run the published comparison suites.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fringe/decode.hpp"
#include "fringe/halftone.hpp"
#include "fringe/manifest.hpp"
#include "fringe/optics.hpp"
#include "fringe/patterns.hpp"
#include "fringe/phase_dbs.hpp"
#include "fringe/pnm.hpp"
#include "fringe/suites.hpp"

namespace fs = std::filesystem;
using namespace fringe;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::string frame_name(int idx) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "pattern_%02d.pgm", idx);
    return buf;
}

uint64_t default_seed() {
    const char* env = std::getenv("FRINGE_SEED");
    if (!env || !*env) return 1;
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string("FRINGE_SEED is not a valid integer: ") + env);
    }
}

PatternSpec spec_from_manifest(const RunManifest& m) {
    PatternSpec spec;
    spec.mode = pattern_mode_from_string(m.mode);
    spec.frames = m.frames;
    spec.width = m.width;
    spec.height = m.height;
    spec.f_high = m.f_high;
    return spec;
}

void save_set(const fs::path& dir, const PatternSet& set, const RunManifest& manifest) {
    fs::create_directories(dir);
    for (int i = 0; i < set.count(); ++i) write_pgm(dir / frame_name(i), set.frames[i]);
    manifest.save(dir / "run.json");
}

std::pair<PatternSet, RunManifest> load_set(const fs::path& dir) {
    const fs::path mpath = dir / "run.json";
    if (!fs::exists(mpath))
        throw std::runtime_error("no run.json in " + dir.string());
    RunManifest m = RunManifest::load(mpath);

    PatternSet set;
    set.frames.reserve(m.frames);
    for (int i = 0; i < m.frames; ++i) {
        const fs::path p = dir / frame_name(i);
        if (!fs::exists(p)) throw std::runtime_error("missing frame: " + p.string());
        set.frames.push_back(read_pgm(p));
    }
    if (set.width() != m.width || set.height() != m.height)
        throw std::runtime_error("frame dimensions disagree with run.json in " + dir.string());
    return {std::move(set), std::move(m)};
}

double run_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    std::string mode = "single";
    int frames = 8;
    int width = 80;
    int height = 480;
    int f_high = 8;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    PatternSpec spec;
    spec.mode = pattern_mode_from_string(a.mode);
    spec.frames = a.frames;
    spec.width = a.width;
    spec.height = a.height;
    spec.f_high = a.f_high;

    const PatternSet set = make_patterns(spec);

    RunManifest m;
    m.mode = a.mode;
    m.frames = a.frames;
    m.width = a.width;
    m.height = a.height;
    m.f_high = a.f_high;
    m.algorithm = "contone";
    m.output_dir = a.out;
    save_set(a.out, set, m);
    std::cout << m.to_json().dump(2) << "\n";
    return 0;
}

// ---- dither -------------------------------------------------------------

struct DitherArgs {
    std::string algo;
    std::string in, out;
    int kernel_size = 15;
    double sigma = 2.0;
    std::string weights = "all";
    std::string solver = "exhaustive";
    int passes = 30;
    int min_flips = 0;
    int order = 8;
    uint64_t seed = 1;
    // which flags were given explicitly, for compatibility checks
    bool has_kernel = false, has_sigma = false, has_weights = false,
         has_solver = false, has_passes = false, has_order = false,
         has_min_flips = false;
};

void check_dither_flags(const DitherArgs& a) {
    auto reject = [&](bool given, const char* flag) {
        if (given)
            throw std::invalid_argument(std::string(flag) + " does not apply to --algo " + a.algo);
    };
    if (a.algo == "whitenoise") {
        reject(a.has_kernel, "--kernel-size");
        reject(a.has_sigma, "--sigma");
        reject(a.has_weights, "--weights");
        reject(a.has_solver, "--solver");
        reject(a.has_passes, "--passes");
        reject(a.has_order, "--order");
        reject(a.has_min_flips, "--min-flips");
    } else if (a.algo == "bayer") {
        reject(a.has_kernel, "--kernel-size");
        reject(a.has_sigma, "--sigma");
        reject(a.has_weights, "--weights");
        reject(a.has_solver, "--solver");
        reject(a.has_passes, "--passes");
        reject(a.has_min_flips, "--min-flips");
    } else if (a.algo == "dbs") {
        reject(a.has_weights, "--weights");
        reject(a.has_solver, "--solver");
        reject(a.has_order, "--order");
        reject(a.has_min_flips, "--min-flips");
    } else if (a.algo == "phasedbs") {
        reject(a.has_order, "--order");
    } else {
        throw std::invalid_argument("unknown --algo " + a.algo);
    }
}

int cmd_dither(const DitherArgs& a) {
    check_dither_flags(a);
    const auto t0 = std::chrono::steady_clock::now();
    auto [contone, manifest] = load_set(a.in);
    if (manifest.algorithm != "contone")
        throw std::runtime_error("dither input must be a contone set (generated by gen)");

    RunManifest out = manifest;
    out.algorithm = a.algo;
    out.input_dir = a.in;
    out.output_dir = a.out;
    out.seed = a.seed;

    PatternSet binary;
    json trace;

    if (a.algo == "whitenoise") {
        binary = white_noise_dither(contone, a.seed);
    } else if (a.algo == "bayer") {
        binary = bayer_dither(contone, a.order);
        out.order = a.order;
        out.seed = 0;
    } else if (a.algo == "dbs") {
        DbsConfig cfg{gaussian_kernel(a.kernel_size, a.sigma)};
        cfg.max_passes = a.passes;
        json passes = json::array();
        cfg.pass_observer = [&passes](int frame, int pass, long accepted) {
            passes.push_back({{"frame", frame}, {"pass", pass}, {"moves", accepted}});
        };
        binary = spatial_dbs(contone, cfg, a.seed);
        trace = json{{"passes", passes}};
        out.kernel_size = a.kernel_size;
        out.sigma = a.sigma;
        out.passes = a.passes;
    } else { // phasedbs
        OptimizeConfig cfg{gaussian_kernel(a.kernel_size, a.sigma),
                           make_weights(weight_preset_from_string(a.weights), contone.count())};
        cfg.mode = solver_mode_from_string(a.solver);
        cfg.max_passes = a.passes;
        cfg.min_flips = a.min_flips;
        cfg.seed = a.seed;
        const WeightPreset preset = weight_preset_from_string(a.weights);
        if (preset == WeightPreset::K12) cfg.target_bins = {2};
        else if (preset == WeightPreset::All && manifest.mode == "dual") cfg.target_bins = {2};
        else cfg.target_bins = {1};

        auto [set, opt_trace] = optimize(contone, cfg);
        binary = std::move(set);

        json passes = json::array();
        for (const auto& p : opt_trace.passes)
            passes.push_back({{"pass", p.pass}, {"flips", p.flips},
                              {"mae_deg", p.mae_deg}, {"cost", p.cost}});
        trace = json{{"passes", passes}, {"best_pass", opt_trace.best_pass}};
        out.kernel_size = a.kernel_size;
        out.sigma = a.sigma;
        out.passes = a.passes;
        out.weights = a.weights;
        out.solver = a.solver;
        out.coeff = cfg.target_bins[0];
    }

    out.duration_s = run_seconds(t0);
    save_set(a.out, binary, out);
    if (!trace.is_null()) write_json(fs::path(a.out) / "trace.json", trace);
    std::cout << out.to_json().dump(2) << "\n";
    return 0;
}

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
    std::string in, out;
    int coeff = 1;
    int kernel_size = 15;
    double sigma = 2.0;
    bool render = false;
    int tile_copies = 0;
};

int cmd_eval(const EvalArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [set, manifest] = load_set(a.in);
    const PatternSpec spec = spec_from_manifest(manifest);
    const fs::path outdir = a.out.empty() ? fs::path(a.in) : fs::path(a.out);
    fs::create_directories(outdir);

    const Kernel kernel = gaussian_kernel(a.kernel_size, a.sigma);
    const bool binary = is_binary(set) && manifest.algorithm != "contone";

    // contone sets are regenerated from the manifest; 8-bit files quantize
    const PatternSet contone = make_patterns(spec);
    const PatternSet decoded_input = binary ? defocus_set(set, kernel) : contone;
    const SpectralField field = dft_pixelwise(decoded_input);
    const PhaseMap phase = phase_map(field, a.coeff);
    const Grid truth = ideal_phase_map(spec, a.coeff);
    const ErrorReport err = wrapped_abs_error(phase.degrees, truth, &phase.valid);

    const std::vector<double> power = binary
        ? residual_power(contone, set, kernel)
        : residual_power(contone, contone, gaussian_kernel(1, 1.0));

    RunManifest out = manifest;
    out.input_dir = a.in;
    out.output_dir = outdir.string();
    out.kernel_size = binary ? a.kernel_size : 0;
    out.sigma = binary ? a.sigma : 0.0;
    out.coeff = a.coeff;
    out.mae_deg = err.mae_deg;
    out.rms_rad = err.rms_rad;
    out.power = power;
    out.duration_s = run_seconds(t0);

    write_json(outdir / "metrics.json", out.metrics_json());
    out.save(outdir / "run.json");

    if (a.render) {
        write_ppm(outdir / "phase.ppm", spec.width, spec.height, phase_to_rgb(phase.degrees));
        const Grid grad = gradient_render(gradient_map(phase.degrees));
        write_ppm(outdir / "gradient.ppm", spec.width, spec.height, unit_to_rgb(grad));
    }
    if (a.tile_copies > 0) {
        const PatternSet tiled = tile_horizontal(set, a.tile_copies);
        for (int i = 0; i < tiled.count(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "tiled_%02d.pgm", i);
            write_pgm(outdir / buf, tiled.frames[i]);
        }
    }

    std::cout << out.metrics_json().dump(2) << "\n";
    return 0;
}

// ---- reproduce ----------------------------------------------------------

int cmd_reproduce(const std::string& suite, uint64_t seed, const std::string& out_dir) {
    json summary;
    if (suite == "table1") {
        const Table1Result r = run_table1(seed, &std::cout);
        summary["suite"] = "table1";
        summary["seed"] = seed;
        summary["seed_mae_single"] = r.seed_mae_single;
        summary["duration_s"] = r.duration_s;
        json cells = json::array();
        for (const auto& c : r.cells)
            cells.push_back({{"name", c.name}, {"reference", c.reference}, {"measured", c.measured}});
        summary["cells"] = cells;
        summary["k1_power"] = r.k1_power;
    } else if (suite == "dai") {
        const DaiResult r = run_dai(seed, &std::cout);
        summary["suite"] = "dai";
        summary["seed"] = seed;
        summary["frames"] = 8;
        summary["width"] = 80;
        summary["height"] = 480;
        summary["period_rows"] = 32;
        summary["kernel_size"] = 5;
        summary["sigma"] = std::sqrt(5.0 / 3.0);
        summary["bayer_order"] = r.bayer_order;
        summary["duration_s"] = r.duration_s;
        summary["cells"] = {
            {{"name", "bayer_rms_rad"}, {"reference", kRefDaiBayerRms}, {"measured", r.bayer_rms}},
            {{"name", "dbs_rms_rad"}, {"reference", kRefDaiDbsRms}, {"measured", r.dbs_rms}},
            {{"name", "phase_rms_rad"}, {"reference", kRefDaiPhaseRms}, {"measured", r.phase_rms}},
        };
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_json(fs::path(out_dir) / "suite.json", summary);
    }
    return 0;
}

// ---- tile ---------------------------------------------------------------

int cmd_tile(const std::string& in, const std::string& out, int copies) {
    auto [set, manifest] = load_set(in);
    const PatternSet tiled = tile_horizontal(set, copies);
    RunManifest m = manifest;
    m.width = tiled.width();
    m.input_dir = in;
    m.output_dir = out;
    save_set(out, tiled, m);
    std::cout << m.to_json().dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-shifted fringe pattern toolkit"};
    app.require_subcommand(1);

    try {
        const uint64_t env_seed = default_seed();

        GenArgs gen;
        auto* sc_gen = app.add_subcommand("gen", "generate a contone pattern set");
        sc_gen->add_option("--mode", gen.mode, "single|dual")->default_val("single");
        sc_gen->add_option("--frames", gen.frames, "patterns per set")->default_val(8);
        sc_gen->add_option("--width", gen.width)->default_val(80);
        sc_gen->add_option("--height", gen.height)->default_val(480);
        sc_gen->add_option("--fhigh", gen.f_high, "high-frequency multiplier (dual)")->default_val(8);
        sc_gen->add_option("--out", gen.out, "output directory")->required();

        DitherArgs dit;
        dit.seed = env_seed;
        auto* sc_dit = app.add_subcommand("dither", "convert a contone set to binary");
        sc_dit->add_option("--algo", dit.algo, "whitenoise|bayer|dbs|phasedbs")->required();
        sc_dit->add_option("--in", dit.in, "contone set directory")->required();
        sc_dit->add_option("--out", dit.out, "output directory")->required();
        auto* o_ks = sc_dit->add_option("--kernel-size", dit.kernel_size);
        auto* o_sg = sc_dit->add_option("--sigma", dit.sigma);
        auto* o_wt = sc_dit->add_option("--weights", dit.weights, "all|k1|k12");
        auto* o_sv = sc_dit->add_option("--solver", dit.solver, "exhaustive|threshold");
        auto* o_ps = sc_dit->add_option("--passes", dit.passes);
        auto* o_mf = sc_dit->add_option("--min-flips", dit.min_flips);
        auto* o_or = sc_dit->add_option("--order", dit.order, "Bayer matrix order");
        sc_dit->add_option("--seed", dit.seed);

        EvalArgs ev;
        auto* sc_ev = app.add_subcommand("eval", "defocus, decode and score a set");
        sc_ev->add_option("--in", ev.in, "pattern set directory")->required();
        sc_ev->add_option("--out", ev.out, "report directory (default: --in)");
        sc_ev->add_option("--coeff", ev.coeff, "spectral bin to decode")->default_val(1);
        sc_ev->add_option("--kernel-size", ev.kernel_size)->default_val(15);
        sc_ev->add_option("--sigma", ev.sigma)->default_val(2.0);
        sc_ev->add_flag("--render", ev.render, "write phase.ppm and gradient.ppm");
        sc_ev->add_option("--tile-copies", ev.tile_copies, "also write a horizontally tiled copy");

        std::string suite;
        uint64_t rep_seed = env_seed;
        std::string rep_out;
        auto* sc_rep = app.add_subcommand("reproduce", "re-run a published comparison");
        sc_rep->add_option("--suite", suite, "table1|dai")->required();
        sc_rep->add_option("--seed", rep_seed);
        sc_rep->add_option("--out", rep_out, "also write suite.json here");

        std::string tile_in, tile_out;
        int tile_copies = 8;
        auto* sc_tile = app.add_subcommand("tile", "replicate a set horizontally");
        sc_tile->add_option("--in", tile_in)->required();
        sc_tile->add_option("--out", tile_out)->required();
        sc_tile->add_option("--copies", tile_copies)->default_val(8);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);
            app.exit(e);
            return kExitUsage;
        }

        if (sc_gen->parsed()) return cmd_gen(gen);
        if (sc_dit->parsed()) {
            dit.has_kernel = o_ks->count() > 0;
            dit.has_sigma = o_sg->count() > 0;
            dit.has_weights = o_wt->count() > 0;
            dit.has_solver = o_sv->count() > 0;
            dit.has_passes = o_ps->count() > 0;
            dit.has_min_flips = o_mf->count() > 0;
            dit.has_order = o_or->count() > 0;
            return cmd_dither(dit);
        }
        if (sc_ev->parsed()) return cmd_eval(ev);
        if (sc_rep->parsed()) return cmd_reproduce(suite, rep_seed, rep_out);
        if (sc_tile->parsed()) return cmd_tile(tile_in, tile_out, tile_copies);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
