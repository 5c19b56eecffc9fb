#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace fringe {

// Everything needed to re-run a command and the metrics it produced.
// Serialized with sorted keys so byte-identical runs diff cleanly.
struct RunManifest {
    // pattern geometry
    std::string mode = "single";
    int frames = 8;
    int width = 80;
    int height = 480;
    int f_high = 8;

    // conversion / evaluation configuration
    std::string algorithm = "contone"; // contone|whitenoise|bayer|dbs|phasedbs
    int kernel_size = 0;               // 0 = no defocus model attached
    double sigma = 0.0;
    std::string weights = "none";      // all|k1|k12|none
    std::string solver = "none";       // exhaustive|threshold|none
    int passes = 0;
    int order = 0;                     // Bayer order, 0 when unused
    int coeff = 1;                     // evaluated spectral bin
    uint64_t seed = 0;

    std::string input_dir;
    std::string output_dir;

    // metrics (negative mae/rms = not evaluated)
    double mae_deg = -1.0;
    double rms_rad = -1.0;
    std::vector<double> power;
    double duration_s = 0.0;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);

    void save(const std::filesystem::path& path) const;
    static RunManifest load(const std::filesystem::path& path);

    // The stable metrics schema: algorithm, frames, width, height,
    // kernel_size, sigma, weights, passes, seed, coeff, mae_deg, rms_rad,
    // power, duration_s.
    nlohmann::json metrics_json() const;
};

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

} // namespace fringe
