#include "fringe/decode.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fringe {

PhaseMap phase_map(const SpectralField& field, int k) {
    if (k < 1 || k >= field.bins())
        throw std::invalid_argument("phase_map: bin out of range");

    const int w = field.width(), h = field.height();
    PhaseMap out{Grid(w, h), Grid(w, h, 1.0)};
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const Cplx v = field.at(k, x, y);
            if (std::abs(v) < kPhaseQualityThreshold) {
                out.degrees.at(x, y) = 0.0;
                out.valid.at(x, y) = 0.0;
                continue;
            }
            double deg = std::atan2(v.imag(), v.real()) * 180.0 / std::numbers::pi;
            if (deg < 0.0) deg += 360.0;
            if (deg >= 360.0) deg = 0.0;
            out.degrees.at(x, y) = deg;
        }
    return out;
}

Grid magnitude_map(const SpectralField& field, int k, bool scaled) {
    if (k < 0 || k >= field.bins())
        throw std::invalid_argument("magnitude_map: bin out of range");

    const double scale = scaled ? 2.0 / field.bins() : 1.0;
    Grid out(field.width(), field.height());
    for (int y = 0; y < field.height(); ++y)
        for (int x = 0; x < field.width(); ++x) {
            const Cplx v = field.at(k, x, y);
            out.at(x, y) = scale * std::sqrt(v.real() * v.real() + v.imag() * v.imag());
        }
    return out;
}

ErrorReport wrapped_abs_error(const Grid& measured, const Grid& truth, const Grid* mask) {
    if (!measured.same_dims(truth))
        throw std::runtime_error("wrapped_abs_error: dimension mismatch");
    if (mask && !mask->same_dims(measured))
        throw std::runtime_error("wrapped_abs_error: mask dimension mismatch");

    ErrorReport rep{Grid(measured.width(), measured.height()), 0.0, 0.0};
    double sum = 0.0, sum_sq = 0.0;
    long count = 0;
    for (int y = 0; y < measured.height(); ++y)
        for (int x = 0; x < measured.width(); ++x) {
            double d = std::fmod(measured.at(x, y) - truth.at(x, y) + 180.0, 360.0);
            if (d < 0.0) d += 360.0;
            const double e = std::abs(d - 180.0);
            rep.error_map.at(x, y) = e;
            if (mask && mask->at(x, y) == 0.0) continue;
            sum += e;
            sum_sq += e * e;
            ++count;
        }
    if (count > 0) {
        rep.mae_deg = sum / count;
        rep.rms_rad = std::sqrt(sum_sq / count) * std::numbers::pi / 180.0;
    }
    return rep;
}

std::vector<double> residual_power(const PatternSet& contone, const PatternSet& binary,
                                   const Kernel& kernel) {
    require_same_dims(contone, binary, "residual_power");

    const SpectralField fc = dft_pixelwise(contone);
    const SpectralField fb = dft_pixelwise(defocus_set(binary, kernel));
    const int n = contone.count();
    const double norm = static_cast<double>(n) * n;
    const double px = static_cast<double>(contone.width()) * contone.height();

    std::vector<double> power(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int y = 0; y < contone.height(); ++y)
            for (int x = 0; x < contone.width(); ++x) {
                const Cplx d = fc.at(k, x, y) - fb.at(k, x, y);
                acc += d.real() * d.real() + d.imag() * d.imag();
            }
        power[k] = acc / (px * norm);
    }
    return power;
}

Grid gradient_map(const Grid& phase_deg) {
    const int w = phase_deg.width(), h = phase_deg.height();
    Grid out(w, h);
    for (int y = 0; y < h; ++y) {
        const int yn = (y + 1) % h;
        for (int x = 0; x < w; ++x) {
            double d = std::fmod(phase_deg.at(x, yn) - phase_deg.at(x, y) + 180.0, 360.0);
            if (d < 0.0) d += 360.0;
            out.at(x, y) = d - 180.0; // [-180, 180)
        }
    }
    return out;
}

Grid gradient_render(const Grid& gradient) {
    Grid out(gradient.width(), gradient.height());
    for (int y = 0; y < gradient.height(); ++y)
        for (int x = 0; x < gradient.width(); ++x)
            out.at(x, y) = (gradient.at(x, y) + 180.0) / 360.0;
    return out;
}

} // namespace fringe
