#include "fringe/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace fringe {

double Kernel::tap_sum() const {
    double s = 0.0;
    for (double t : taps) s += t;
    return s;
}

double Kernel::tap_energy() const {
    double s = 0.0;
    for (double t : taps) s += t * t;
    return s;
}

Kernel gaussian_kernel(int size, double sigma) {
    if (size < 1 || size % 2 == 0)
        throw std::invalid_argument("kernel size must be odd and positive");
    if (!(sigma > 0.0))
        throw std::invalid_argument("kernel sigma must be positive");

    Kernel k;
    k.size = size;
    k.sigma = sigma;
    k.taps.assign(static_cast<size_t>(size) * size, 0.0);

    const int r = size / 2;
    double sum = 0.0;
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
            const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            k.tap(dx, dy) = v;
            sum += v;
        }
    for (double& t : k.taps) t /= sum;
    return k;
}

SurroundSplit split_center(const Kernel& k) {
    SurroundSplit s{k, k.center()};
    s.surround.tap(0, 0) = 0.0;
    return s;
}

Grid convolve_toroidal(const Grid& grid, const Kernel& k) {
    const int w = grid.width(), h = grid.height();
    const int r = k.radius();
    Grid out(w, h);

    // wrapped source row index per kernel row offset
    std::vector<int> wrap_y(2 * r + 1);
    std::vector<int> wrap_x(2 * r + 1);

    for (int y = 0; y < h; ++y) {
        for (int dy = -r; dy <= r; ++dy) {
            int yy = (y - dy) % h;
            if (yy < 0) yy += h;
            wrap_y[dy + r] = yy;
        }
        for (int x = 0; x < w; ++x) {
            for (int dx = -r; dx <= r; ++dx) {
                int xx = (x - dx) % w;
                if (xx < 0) xx += w;
                wrap_x[dx + r] = xx;
            }
            double acc = 0.0;
            for (int dy = -r; dy <= r; ++dy) {
                const double* row = grid.data() + static_cast<size_t>(wrap_y[dy + r]) * w;
                const double* trow = k.taps.data() + static_cast<size_t>(dy + r) * k.size;
                for (int dx = -r; dx <= r; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    acc += trow[dx + r] * row[wrap_x[dx + r]];
                }
            }
            acc += k.center() * grid.at(x, y); // center last, keeps the split exact
            out.at(x, y) = acc;
        }
    }
    return out;
}

PatternSet defocus_set(const PatternSet& set, const Kernel& k) {
    PatternSet out;
    out.frames.reserve(set.frames.size());
    for (const auto& f : set.frames) out.frames.push_back(convolve_toroidal(f, k));
    return out;
}

} // namespace fringe
