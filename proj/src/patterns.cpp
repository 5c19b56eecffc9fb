#include "fringe/patterns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fringe {

std::string to_string(PatternMode m) {
    return m == PatternMode::Single ? "single" : "dual";
}

PatternMode pattern_mode_from_string(const std::string& s) {
    if (s == "single") return PatternMode::Single;
    if (s == "dual") return PatternMode::Dual;
    throw std::invalid_argument("unknown pattern mode: " + s);
}

void PatternSpec::validate() const {
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (height < 2) throw std::invalid_argument("height must be >= 2");
    if (mode == PatternMode::Single && frames < 3)
        throw std::invalid_argument("single-frequency sets need at least 3 frames");
    if (mode == PatternMode::Dual && frames < 5)
        throw std::invalid_argument("dual-frequency sets need at least 5 frames");
    if (mode == PatternMode::Dual && f_high < 1)
        throw std::invalid_argument("f_high must be >= 1");
}

PatternSet make_patterns(const PatternSpec& spec) {
    spec.validate();
    const double two_pi = 2.0 * std::numbers::pi;
    const int n_frames = spec.frames;

    PatternSet set;
    set.frames.reserve(n_frames);
    for (int n = 0; n < n_frames; ++n) {
        Grid frame(spec.width, spec.height);
        for (int y = 0; y < spec.height; ++y) {
            const double yp = static_cast<double>(y) / spec.height;
            double v;
            if (spec.mode == PatternMode::Single) {
                v = 0.5 + 0.5 * std::cos(two_pi * (static_cast<double>(n) / n_frames - yp));
            } else {
                v = 0.5 + 0.25 * std::cos(two_pi * (static_cast<double>(n) / n_frames - yp))
                        + 0.25 * std::cos(two_pi * (2.0 * n / n_frames - spec.f_high * yp));
            }
            for (int x = 0; x < spec.width; ++x) frame.at(x, y) = v;
        }
        set.frames.push_back(std::move(frame));
    }
    return set;
}

std::vector<double> ideal_phase(const PatternSpec& spec, int k) {
    spec.validate();
    if (k != 1 && !(k == 2 && spec.mode == PatternMode::Dual))
        throw std::invalid_argument("no ground-truth phase at this bin for this pattern mode");

    const double freq = (k == 2) ? static_cast<double>(spec.f_high) : 1.0;
    std::vector<double> phase(spec.height);
    for (int y = 0; y < spec.height; ++y) {
        const double yp = static_cast<double>(y) / spec.height;
        double deg = std::fmod(360.0 * freq * yp, 360.0);
        if (deg < 0.0) deg += 360.0;
        phase[y] = deg;
    }
    return phase;
}

Grid ideal_phase_map(const PatternSpec& spec, int k) {
    const auto rows = ideal_phase(spec, k);
    Grid map(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y)
        for (int x = 0; x < spec.width; ++x)
            map.at(x, y) = rows[y];
    return map;
}

PatternSet tile_horizontal(const PatternSet& set, int copies) {
    if (copies < 1) throw std::invalid_argument("tile copies must be >= 1");
    PatternSet out;
    out.frames.reserve(set.frames.size());
    for (const auto& f : set.frames) {
        Grid wide(f.width() * copies, f.height());
        for (int y = 0; y < f.height(); ++y)
            for (int c = 0; c < copies; ++c)
                for (int x = 0; x < f.width(); ++x)
                    wide.at(c * f.width() + x, y) = f.at(x, y);
        out.frames.push_back(std::move(wide));
    }
    return out;
}

} // namespace fringe
