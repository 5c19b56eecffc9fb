#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fringe/grid.hpp"

namespace fringe {

using Cplx = std::complex<double>;

// Temporal DFT convention used everywhere in this project:
//   forward:  V[k] = sum_n v[n] * exp(+j 2 pi k n / N)   (unnormalized)
//   inverse:  v[n] = (1/N) sum_k V[k] * exp(-j 2 pi k n / N)
// The +j forward sign makes the decoded phase of a pattern increase with
// its row coordinate.
std::vector<Cplx> dft_forward(std::span<const double> v);
std::vector<double> dft_inverse_real(std::span<const Cplx> V);

// Per-pixel temporal spectrum of an N-frame set, stored bin-major:
// value(k, x, y) = DFT of the pixel's N-vector at bin k.
class SpectralField {
public:
    SpectralField() = default;
    SpectralField(int bins, int width, int height)
        : bins_(bins), width_(width), height_(height),
          data_(static_cast<size_t>(bins) * width * height) {}

    int bins() const { return bins_; }
    int width() const { return width_; }
    int height() const { return height_; }

    Cplx& at(int k, int x, int y) {
        return data_[(static_cast<size_t>(k) * height_ + y) * width_ + x];
    }
    Cplx at(int k, int x, int y) const {
        return data_[(static_cast<size_t>(k) * height_ + y) * width_ + x];
    }

private:
    int bins_ = 0;
    int width_ = 0;
    int height_ = 0;
    std::vector<Cplx> data_;
};

SpectralField dft_pixelwise(const PatternSet& set);

} // namespace fringe
