#include "fringe/manifest.hpp"

#include <fstream>

namespace fringe {

using nlohmann::json;

json RunManifest::to_json() const {
    json j;
    j["mode"] = mode;
    j["frames"] = frames;
    j["width"] = width;
    j["height"] = height;
    j["f_high"] = f_high;
    j["algorithm"] = algorithm;
    j["kernel_size"] = kernel_size;
    j["sigma"] = sigma;
    j["weights"] = weights;
    j["solver"] = solver;
    j["passes"] = passes;
    j["order"] = order;
    j["coeff"] = coeff;
    j["seed"] = seed;
    j["input_dir"] = input_dir;
    j["output_dir"] = output_dir;
    j["mae_deg"] = mae_deg;
    j["rms_rad"] = rms_rad;
    j["power"] = power;
    j["duration_s"] = duration_s;
    return j;
}

RunManifest RunManifest::from_json(const json& j) {
    RunManifest m;
    m.mode = j.value("mode", m.mode);
    m.frames = j.value("frames", m.frames);
    m.width = j.value("width", m.width);
    m.height = j.value("height", m.height);
    m.f_high = j.value("f_high", m.f_high);
    m.algorithm = j.value("algorithm", m.algorithm);
    m.kernel_size = j.value("kernel_size", m.kernel_size);
    m.sigma = j.value("sigma", m.sigma);
    m.weights = j.value("weights", m.weights);
    m.solver = j.value("solver", m.solver);
    m.passes = j.value("passes", m.passes);
    m.order = j.value("order", m.order);
    m.coeff = j.value("coeff", m.coeff);
    m.seed = j.value("seed", m.seed);
    m.input_dir = j.value("input_dir", m.input_dir);
    m.output_dir = j.value("output_dir", m.output_dir);
    m.mae_deg = j.value("mae_deg", m.mae_deg);
    m.rms_rad = j.value("rms_rad", m.rms_rad);
    m.power = j.value("power", m.power);
    m.duration_s = j.value("duration_s", m.duration_s);
    return m;
}

void RunManifest::save(const std::filesystem::path& path) const {
    write_json(path, to_json());
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
    return from_json(load_json(path));
}

json RunManifest::metrics_json() const {
    json j;
    j["algorithm"] = algorithm;
    j["frames"] = frames;
    j["width"] = width;
    j["height"] = height;
    j["kernel_size"] = kernel_size;
    j["sigma"] = sigma;
    j["weights"] = weights;
    j["passes"] = passes;
    j["seed"] = seed;
    j["coeff"] = coeff;
    j["mae_deg"] = mae_deg;
    j["rms_rad"] = rms_rad;
    j["power"] = power;
    j["duration_s"] = duration_s;
    return j;
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("bad json in " + path.string() + ": " + e.what());
    }
    return j;
}

} // namespace fringe
