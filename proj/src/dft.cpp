#include "fringe/dft.hpp"

#include <numbers>
#include <stdexcept>

namespace fringe {

namespace {

// exp(+j 2 pi m / N) for m = 0..N-1
std::vector<Cplx> twiddle_table(int n) {
    std::vector<Cplx> w(n);
    for (int m = 0; m < n; ++m)
        w[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
    return w;
}

} // namespace

std::vector<Cplx> dft_forward(std::span<const double> v) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("dft_forward: empty vector");
    const auto w = twiddle_table(n);
    std::vector<Cplx> out(n);
    for (int k = 0; k < n; ++k) {
        Cplx acc{0.0, 0.0};
        for (int i = 0; i < n; ++i)
            acc += v[i] * w[(static_cast<long long>(k) * i) % n];
        out[k] = acc;
    }
    return out;
}

std::vector<double> dft_inverse_real(std::span<const Cplx> V) {
    const int n = static_cast<int>(V.size());
    if (n < 1) throw std::invalid_argument("dft_inverse_real: empty vector");
    const auto w = twiddle_table(n);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        Cplx acc{0.0, 0.0};
        for (int k = 0; k < n; ++k)
            acc += V[k] * std::conj(w[(static_cast<long long>(k) * i) % n]);
        out[i] = acc.real() / n;
    }
    return out;
}

SpectralField dft_pixelwise(const PatternSet& set) {
    const int n = set.count();
    if (n < 3) throw std::invalid_argument("dft_pixelwise: need at least 3 frames");
    const int w = set.width(), h = set.height();
    const auto tw = twiddle_table(n);

    SpectralField field(n, w, h);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const Cplx wk = tw[(static_cast<long long>(k) * i) % n];
            const double* src = set.frames[i].data();
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x)
                    field.at(k, x, y) += src[static_cast<size_t>(y) * w + x] * wk;
        }
    }
    return field;
}

} // namespace fringe
