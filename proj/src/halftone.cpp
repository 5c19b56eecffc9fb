#include "fringe/halftone.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fringe {

PatternSet white_noise_dither(const PatternSet& contone, uint64_t seed) {
    if (!is_contone(contone))
        throw std::invalid_argument("white_noise_dither: input must be contone in [0,1]");

    std::mt19937_64 rng(seed);
    PatternSet out;
    out.frames.reserve(contone.frames.size());
    for (const auto& f : contone.frames) {
        Grid b(f.width(), f.height());
        for (int y = 0; y < f.height(); ++y)
            for (int x = 0; x < f.width(); ++x) {
                // top 53 bits -> uniform in [0,1), portable across platforms
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                b.at(x, y) = (u < f.at(x, y)) ? 1.0 : 0.0;
            }
        out.frames.push_back(std::move(b));
    }
    return out;
}

std::vector<int> bayer_matrix(int order) {
    if (order != 2 && order != 4 && order != 8 && order != 16)
        throw std::invalid_argument("bayer order must be one of 2, 4, 8, 16");

    std::vector<int> b{0, 2, 3, 1}; // row-major 2x2
    int side = 2;
    while (side < order) {
        const int next = side * 2;
        std::vector<int> nb(static_cast<size_t>(next) * next);
        for (int y = 0; y < next; ++y)
            for (int x = 0; x < next; ++x) {
                const int quad = (y / side) * 2 + (x / side); // index into the 2x2 base
                static constexpr std::array<int, 4> base{0, 2, 3, 1};
                nb[static_cast<size_t>(y) * next + x] =
                    4 * b[static_cast<size_t>(y % side) * side + (x % side)] + base[quad];
            }
        b = std::move(nb);
        side = next;
    }
    return b;
}

PatternSet bayer_dither(const PatternSet& contone, int order) {
    if (!is_contone(contone))
        throw std::invalid_argument("bayer_dither: input must be contone in [0,1]");
    const auto b = bayer_matrix(order);
    const double inv = 1.0 / (order * order);

    PatternSet out;
    out.frames.reserve(contone.frames.size());
    for (const auto& f : contone.frames) {
        Grid g(f.width(), f.height());
        for (int y = 0; y < f.height(); ++y)
            for (int x = 0; x < f.width(); ++x) {
                const double thresh = (b[static_cast<size_t>(y % order) * order + (x % order)] + 0.5) * inv;
                g.at(x, y) = (f.at(x, y) > thresh) ? 1.0 : 0.0;
            }
        out.frames.push_back(std::move(g));
    }
    return out;
}

namespace {

// Kernel autocorrelation folded onto the grid torus. On grids at least as
// large as 2*size-1 this is just the plain autocorrelation; smaller grids
// accumulate the aliases, which keeps the move deltas exact there too.
struct FoldedAutocorr {
    Grid table;                                 // dense H x W, mostly zero
    std::vector<std::array<int, 2>> offsets;    // nonzero cells (x, y)
    std::vector<double> values;
    double at_zero = 0.0;

    FoldedAutocorr(const Kernel& k, int w, int h) : table(w, h, 0.0) {
        const int r = k.radius();
        Grid hit(w, h, 0.0);
        for (int ty = -(k.size - 1); ty <= k.size - 1; ++ty)
            for (int tx = -(k.size - 1); tx <= k.size - 1; ++tx) {
                double acc = 0.0;
                for (int dy = std::max(-r, -r - ty); dy <= std::min(r, r - ty); ++dy)
                    for (int dx = std::max(-r, -r - tx); dx <= std::min(r, r - tx); ++dx)
                        acc += k.tap(dx, dy) * k.tap(dx + tx, dy + ty);
                if (acc == 0.0) continue;
                int fx = tx % w; if (fx < 0) fx += w;
                int fy = ty % h; if (fy < 0) fy += h;
                table.at(fx, fy) += acc;
                hit.at(fx, fy) = 1.0;
            }
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (hit.at(x, y) != 0.0) {
                    offsets.push_back({x, y});
                    values.push_back(table.at(x, y));
                }
        at_zero = table.at(0, 0);
    }

    double at(int dx, int dy, int w, int h) const {
        int fx = dx % w; if (fx < 0) fx += w;
        int fy = dy % h; if (fy < 0) fy += h;
        return table.at(fx, fy);
    }
};

// neighbor visit order fixes the tie rule
constexpr std::array<std::array<int, 2>, 8> kNeighbors{{
    {-1, -1}, {0, -1}, {1, -1},
    {-1, 0},           {1, 0},
    {-1, 1},  {0, 1},  {1, 1},
}};

// cpe = folded-autocorrelation (*) (binary - contone), maintained incrementally
void halftone_frame(const Grid& contone, Grid& binary, const FoldedAutocorr& ac,
                    const DbsConfig& cfg, int frame_idx) {
    const int w = contone.width(), h = contone.height();

    Grid cpe(w, h, 0.0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double e = binary.at(x, y) - contone.at(x, y);
            if (e == 0.0) continue;
            for (size_t i = 0; i < ac.offsets.size(); ++i) {
                const int px = (x + ac.offsets[i][0]) % w;
                const int py = (y + ac.offsets[i][1]) % h;
                cpe.at(px, py) += e * ac.values[i];
            }
        }

    auto apply_impulse = [&](int x, int y, double delta) {
        for (size_t i = 0; i < ac.offsets.size(); ++i) {
            const int px = (x + ac.offsets[i][0]) % w;
            const int py = (y + ac.offsets[i][1]) % h;
            cpe.at(px, py) += delta * ac.values[i];
        }
    };

    for (int pass = 0; pass < cfg.max_passes; ++pass) {
        long accepted = 0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double bit = binary.at(x, y);
                const double d = 1.0 - 2.0 * bit; // toggle direction

                // toggle first, then neighbors in fixed order; strict < keeps
                // the earliest candidate on ties
                double best = 2.0 * d * cpe.at(x, y) + ac.at_zero;
                int best_move = 0; // 0 toggle, 1..8 swap with kNeighbors[best_move-1]
                for (int i = 0; i < 8; ++i) {
                    const int nx = (x + kNeighbors[i][0] + w) % w;
                    const int ny = (y + kNeighbors[i][1] + h) % h;
                    if (binary.at(nx, ny) == bit) continue;
                    const double dE = 2.0 * d * (cpe.at(x, y) - cpe.at(nx, ny))
                                    + 2.0 * ac.at_zero
                                    - 2.0 * ac.at(kNeighbors[i][0], kNeighbors[i][1], w, h);
                    if (dE < best) {
                        best = dE;
                        best_move = i + 1;
                    }
                }
                if (!(best < 0.0)) continue;

                ++accepted;
                if (best_move == 0) {
                    binary.at(x, y) = 1.0 - bit;
                    apply_impulse(x, y, d);
                    if (cfg.observer)
                        cfg.observer({frame_idx, x, y, true, 0, 0, best});
                } else {
                    const int nx = (x + kNeighbors[best_move - 1][0] + w) % w;
                    const int ny = (y + kNeighbors[best_move - 1][1] + h) % h;
                    binary.at(x, y) = 1.0 - bit;
                    binary.at(nx, ny) = bit;
                    apply_impulse(x, y, d);
                    apply_impulse(nx, ny, -d);
                    if (cfg.observer)
                        cfg.observer({frame_idx, x, y, false, nx, ny, best});
                }
            }
        }
        if (cfg.pass_observer) cfg.pass_observer(frame_idx, pass + 1, accepted);
        if (accepted == 0) break;
    }
}

} // namespace

PatternSet spatial_dbs(const PatternSet& contone, const DbsConfig& cfg, uint64_t seed) {
    if (!is_contone(contone))
        throw std::invalid_argument("spatial_dbs: input must be contone in [0,1]");
    if (cfg.max_passes < 1)
        throw std::invalid_argument("spatial_dbs: max_passes must be >= 1");

    PatternSet binary = white_noise_dither(contone, seed);
    const FoldedAutocorr ac(cfg.kernel, contone.width(), contone.height());
    for (int f = 0; f < contone.count(); ++f)
        halftone_frame(contone.frames[f], binary.frames[f], ac, cfg, f);
    return binary;
}

std::vector<double> dbs_error(const PatternSet& binary, const PatternSet& contone,
                              const Kernel& kernel) {
    require_same_dims(binary, contone, "dbs_error");
    std::vector<double> out;
    out.reserve(binary.frames.size());
    for (int f = 0; f < binary.count(); ++f) {
        const Grid& b = binary.frames[f];
        const Grid& c = contone.frames[f];
        Grid diff(b.width(), b.height());
        for (int y = 0; y < b.height(); ++y)
            for (int x = 0; x < b.width(); ++x)
                diff.at(x, y) = b.at(x, y) - c.at(x, y);
        const Grid filt = convolve_toroidal(diff, kernel);
        double e = 0.0;
        for (size_t i = 0; i < filt.size(); ++i) e += filt.data()[i] * filt.data()[i];
        out.push_back(e);
    }
    return out;
}

} // namespace fringe
