#include "fringe/phase_dbs.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fringe/decode.hpp"
#include "fringe/halftone.hpp"

namespace fringe {

std::string to_string(WeightPreset p) {
    switch (p) {
        case WeightPreset::All: return "all";
        case WeightPreset::K1: return "k1";
        case WeightPreset::K12: return "k12";
    }
    return "all";
}

WeightPreset weight_preset_from_string(const std::string& s) {
    if (s == "all") return WeightPreset::All;
    if (s == "k1") return WeightPreset::K1;
    if (s == "k12") return WeightPreset::K12;
    throw std::invalid_argument("unknown weight preset: " + s);
}

std::vector<double> make_weights(WeightPreset p, int frames) {
    if (frames < 3) throw std::invalid_argument("make_weights: need at least 3 frames");
    std::vector<double> w(frames, 0.0);
    switch (p) {
        case WeightPreset::All:
            for (double& v : w) v = 1.0;
            break;
        case WeightPreset::K1:
            w[1] = 1.0;
            break;
        case WeightPreset::K12:
            w[1] = 1.0;
            w[2] = 1.0;
            break;
    }
    return w;
}

std::string to_string(SolverMode m) {
    return m == SolverMode::Exhaustive ? "exhaustive" : "threshold";
}

SolverMode solver_mode_from_string(const std::string& s) {
    if (s == "exhaustive") return SolverMode::Exhaustive;
    if (s == "threshold") return SolverMode::Threshold;
    throw std::invalid_argument("unknown solver mode: " + s);
}

namespace {

// Shared accumulation order for the surround sum. Must visit taps in scan
// order with the (zero) center contribution last so results stay bitwise
// equal to a full-kernel convolution minus the center term.
double surround_at(const Grid& frame, const Kernel& surround,
                   const int* wrap_x, const int* wrap_y) {
    const int r = surround.radius();
    double acc = 0.0;
    for (int dy = -r; dy <= r; ++dy) {
        const double* row = frame.data() + static_cast<size_t>(wrap_y[dy + r]) * frame.width();
        const double* trow = surround.taps.data() + static_cast<size_t>(dy + r) * surround.size;
        for (int dx = -r; dx <= r; ++dx) {
            if (dx == 0 && dy == 0) continue;
            acc += trow[dx + r] * row[wrap_x[dx + r]];
        }
    }
    acc += surround.center() * frame.data()[static_cast<size_t>(wrap_y[r]) * frame.width() + wrap_x[r]];
    return acc;
}

void fill_wrap(int center, int extent, int radius, int* out) {
    for (int d = -radius; d <= radius; ++d) {
        int v = (center - d) % extent;
        if (v < 0) v += extent;
        out[d + radius] = v;
    }
}

// DFT of every N-bit pattern, built incrementally from the lowest set bit.
std::vector<Cplx> bit_dft_table(int n) {
    const uint32_t count = 1u << n;
    std::vector<Cplx> w(n * n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            w[static_cast<size_t>(k) * n + i] =
                std::polar(1.0, 2.0 * std::numbers::pi * ((static_cast<long long>(k) * i) % n) / n);

    std::vector<Cplx> table(static_cast<size_t>(count) * n);
    for (uint32_t b = 1; b < count; ++b) {
        const int bit = std::countr_zero(b);
        const uint32_t prev = b & (b - 1);
        for (int k = 0; k < n; ++k)
            table[static_cast<size_t>(b) * n + k] =
                table[static_cast<size_t>(prev) * n + k] + w[static_cast<size_t>(k) * n + bit];
    }
    return table;
}

uint32_t solve_exhaustive(std::span<const Cplx> d, double c, std::span<const int> bins,
                          std::span<const double> weights, std::span<const Cplx> table) {
    const int n = static_cast<int>(d.size());
    const uint32_t count = 1u << n;
    double best_cost = std::numeric_limits<double>::infinity();
    uint32_t best = 0;
    for (uint32_t b = 0; b < count; ++b) {
        const Cplx* row = table.data() + static_cast<size_t>(b) * n;
        double cost = 0.0;
        for (int k : bins) {
            const Cplx diff = d[k] - c * row[k];
            cost += weights[k] * (diff.real() * diff.real() + diff.imag() * diff.imag());
        }
        if (cost < best_cost) {
            best_cost = cost;
            best = b;
        }
    }
    return best;
}

std::vector<int> active_bins(std::span<const double> weights) {
    std::vector<int> bins;
    for (int k = 0; k < static_cast<int>(weights.size()); ++k)
        if (weights[k] > 0.0) bins.push_back(k);
    if (bins.empty())
        throw std::invalid_argument("weight vector needs at least one positive entry");
    return bins;
}

} // namespace

std::vector<double> surround_vector(const PatternSet& binary, const Kernel& surround,
                                    int x, int y) {
    if (x < 0 || y < 0 || x >= binary.width() || y >= binary.height())
        throw std::invalid_argument("surround_vector: coordinates out of range");
    if (surround.center() != 0.0)
        throw std::invalid_argument("surround_vector: kernel center must be zero");

    const int r = surround.radius();
    std::vector<int> wx(2 * r + 1), wy(2 * r + 1);
    fill_wrap(x, binary.width(), r, wx.data());
    fill_wrap(y, binary.height(), r, wy.data());

    std::vector<double> out(binary.count());
    for (int f = 0; f < binary.count(); ++f)
        out[f] = surround_at(binary.frames[f], surround, wx.data(), wy.data());
    return out;
}

std::vector<Cplx> spectral_difference(std::span<const double> contone_vec,
                                      std::span<const double> surround_vec) {
    if (contone_vec.size() != surround_vec.size())
        throw std::invalid_argument("spectral_difference: length mismatch");
    const auto a = dft_forward(contone_vec);
    const auto b = dft_forward(surround_vec);
    std::vector<Cplx> d(a.size());
    for (size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
    return d;
}

uint32_t best_binary_exhaustive(std::span<const Cplx> d, double center_weight,
                                std::span<const double> weights) {
    const int n = static_cast<int>(d.size());
    if (n < 1 || n > 16)
        throw std::invalid_argument("best_binary_exhaustive: supports 1..16 frames");
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("best_binary_exhaustive: weight count mismatch");
    const auto bins = active_bins(weights);
    const auto table = bit_dft_table(n);
    return solve_exhaustive(d, center_weight, bins, weights, table);
}

uint32_t best_binary_threshold(std::span<const Cplx> d) {
    if (d.size() < 1 || d.size() > 32)
        throw std::invalid_argument("best_binary_threshold: supports 1..32 frames");
    const auto spatial = dft_inverse_real(d);
    uint32_t bits = 0;
    for (size_t i = 0; i < spatial.size(); ++i)
        if (spatial[i] > 0.0) bits |= 1u << i;
    return bits;
}

std::pair<PatternSet, OptimizationTrace> optimize(const PatternSet& contone,
                                                  const OptimizeConfig& cfg) {
    if (!is_contone(contone))
        throw std::invalid_argument("optimize: input must be contone in [0,1]");
    const int n = contone.count();
    if (n < 3) throw std::invalid_argument("optimize: need at least 3 frames");
    if (static_cast<int>(cfg.weights.size()) != n)
        throw std::invalid_argument("optimize: weight count must equal frame count");
    if (cfg.max_passes < 1)
        throw std::invalid_argument("optimize: max_passes must be >= 1");
    if (cfg.mode == SolverMode::Exhaustive && n > 16)
        throw std::invalid_argument("optimize: exhaustive solver supports at most 16 frames");
    if (n > 32)
        throw std::invalid_argument("optimize: at most 32 frames");
    if (cfg.target_bins.empty())
        throw std::invalid_argument("optimize: need at least one target bin");
    for (int k : cfg.target_bins)
        if (k < 1 || k >= n)
            throw std::invalid_argument("optimize: target bin out of range");

    const auto bins = active_bins(cfg.weights);
    const int w = contone.width(), h = contone.height();
    const auto split = split_center(cfg.kernel);
    const double c = split.center_weight;
    const int r = cfg.kernel.radius();

    // ground truth for the progress metric: the contone set's own phase
    const SpectralField contone_field = dft_pixelwise(contone);
    std::vector<Grid> truth;
    truth.reserve(cfg.target_bins.size());
    for (int k : cfg.target_bins) truth.push_back(phase_map(contone_field, k).degrees);

    std::vector<Cplx> table;
    if (cfg.mode == SolverMode::Exhaustive) table = bit_dft_table(n);

    PatternSet binary = white_noise_dither(contone, cfg.seed);
    PatternSet best_set = binary;
    double best_mae = std::numeric_limits<double>::infinity();
    int best_pass = 0;

    OptimizationTrace trace;
    std::vector<int> wx(2 * r + 1), wy(2 * r + 1);
    std::vector<double> svec(n), cvec(n);
    std::vector<Cplx> diff(n), spec_c(n), spec_s(n);

    // same twiddle values and accumulation order as dft_forward
    std::vector<Cplx> tw(n);
    for (int m = 0; m < n; ++m) tw[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
    auto forward_into = [&](const std::vector<double>& v, std::vector<Cplx>& out) {
        for (int k = 0; k < n; ++k) {
            Cplx acc{0.0, 0.0};
            for (int i = 0; i < n; ++i)
                acc += v[i] * tw[(static_cast<long long>(k) * i) % n];
            out[k] = acc;
        }
    };

    for (int pass = 1; pass <= cfg.max_passes; ++pass) {
        long flips = 0;
        for (int y = 0; y < h; ++y) {
            fill_wrap(y, h, r, wy.data());
            for (int x = 0; x < w; ++x) {
                fill_wrap(x, w, r, wx.data());
                uint32_t old_bits = 0;
                for (int f = 0; f < n; ++f) {
                    svec[f] = surround_at(binary.frames[f], split.surround, wx.data(), wy.data());
                    if (binary.frames[f].at(x, y) != 0.0) old_bits |= 1u << f;
                }
                for (int f = 0; f < n; ++f) cvec[f] = contone.frames[f].at(x, y);
                forward_into(cvec, spec_c);
                forward_into(svec, spec_s);
                for (int k = 0; k < n; ++k) diff[k] = spec_c[k] - spec_s[k];

                const uint32_t bits = (cfg.mode == SolverMode::Exhaustive)
                    ? solve_exhaustive(diff, c, bins, cfg.weights, table)
                    : best_binary_threshold(diff);
                if (bits == old_bits) continue;

                flips += std::popcount(bits ^ old_bits);
                for (int f = 0; f < n; ++f)
                    binary.frames[f].at(x, y) = (bits >> f) & 1u ? 1.0 : 0.0;
            }
        }

        // pass-end progress metrics from the defocused state
        const SpectralField fb = dft_pixelwise(defocus_set(binary, cfg.kernel));
        double mae_acc = 0.0;
        for (size_t t = 0; t < cfg.target_bins.size(); ++t)
            mae_acc += wrapped_abs_error(phase_map(fb, cfg.target_bins[t]).degrees, truth[t]).mae_deg;
        const double mae = mae_acc / cfg.target_bins.size();

        double cost = 0.0;
        const double px = static_cast<double>(w) * h;
        for (int k : bins) {
            double acc = 0.0;
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    const Cplx dv = contone_field.at(k, x, y) - fb.at(k, x, y);
                    acc += dv.real() * dv.real() + dv.imag() * dv.imag();
                }
            cost += cfg.weights[k] * acc / (px * n * n);
        }

        trace.passes.push_back({pass, flips, mae, cost});
        if (mae < best_mae) {
            best_mae = mae;
            best_set = binary;
            best_pass = pass;
        }
        if (flips < cfg.min_flips) break;
    }

    trace.best_pass = best_pass;
    return {std::move(best_set), std::move(trace)};
}

} // namespace fringe
