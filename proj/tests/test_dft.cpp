#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <complex>
#include <random>
#include <vector>

#include "fringe/dft.hpp"
#include "fringe/patterns.hpp"

using namespace fringe;

namespace {

std::vector<double> random_vector(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

} // namespace

TEST_CASE("constant input concentrates in the dc bin") {
    const std::vector<double> v(8, 0.25);
    const auto bins = dft_forward(v);
    CHECK(std::abs(bins[0] - Cplx(2.0, 0.0)) < 1e-12);
    for (int k = 1; k < 8; ++k)
        CHECK(std::abs(bins[k]) < 1e-12);
}

TEST_CASE("single-frequency pixel vector has the expected bins") {
    // frame samples for a pixel at y = 0.125 with N = 8
    const double y = 0.125;
    std::vector<double> v(8);
    for (int n = 0; n < 8; ++n)
        v[n] = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * (n / 8.0 - y));
    const auto bins = dft_forward(v);

    CHECK(std::abs(bins[0] - Cplx(4.0, 0.0)) < 1e-12);
    CHECK(std::abs(bins[1]) == doctest::Approx(2.0).epsilon(1e-12));
    // the fundamental's argument carries the phase, positive sign convention
    CHECK(std::arg(bins[1]) == doctest::Approx(2.0 * std::numbers::pi * y).epsilon(1e-12));
    for (int k : {2, 3, 4, 5, 6})
        CHECK(std::abs(bins[k]) < 1e-12);
    CHECK(std::abs(bins[7] - std::conj(bins[1])) < 1e-12);
}

TEST_CASE("inverse transform restores the input") {
    std::mt19937 rng(11);
    for (int n : {3, 5, 8, 13}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto v = random_vector(rng, n);
            const auto back = dft_inverse_real(dft_forward(v));
            REQUIRE(back.size() == v.size());
            for (int i = 0; i < n; ++i)
                CHECK(std::abs(back[i] - v[i]) < 1e-9);
        }
    }
}

TEST_CASE("transform preserves energy up to the length factor") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const auto v = random_vector(rng, 8);
        const auto bins = dft_forward(v);
        double spatial = 0.0;
        for (double x : v) spatial += x * x;
        double spectral = 0.0;
        for (const Cplx& b : bins) spectral += std::norm(b);
        CHECK(std::abs(spectral - 8.0 * spatial) < 1e-9);
    }
}

TEST_CASE("real input gives a conjugate-symmetric spectrum") {
    std::mt19937 rng(13);
    for (int n : {4, 8, 9}) {
        const auto v = random_vector(rng, n);
        const auto bins = dft_forward(v);
        for (int k = 1; k < n; ++k)
            CHECK(std::abs(bins[k] - std::conj(bins[n - k])) < 1e-9);
    }
}

TEST_CASE("pixelwise transform matches the vector transform bit for bit") {
    PatternSpec spec;
    spec.mode = PatternMode::Single;
    spec.frames = 8;
    spec.width = 6;
    spec.height = 11;
    PatternSet set = make_patterns(spec);
    // break row constancy so the check is not degenerate
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (auto& f : set.frames)
        for (int y = 0; y < f.height(); ++y)
            for (int x = 0; x < f.width(); ++x)
                f.at(x, y) = dist(rng);

    const SpectralField field = dft_pixelwise(set);
    REQUIRE(field.bins() == 8);
    for (int y = 0; y < set.height(); ++y)
        for (int x = 0; x < set.width(); ++x) {
            std::vector<double> v(8);
            for (int n = 0; n < 8; ++n) v[n] = set.frames[n].at(x, y);
            const auto bins = dft_forward(v);
            for (int k = 0; k < 8; ++k) {
                CHECK(field.at(k, x, y).real() == bins[k].real());
                CHECK(field.at(k, x, y).imag() == bins[k].imag());
            }
        }
}

TEST_CASE("degenerate transforms are rejected") {
    CHECK_THROWS_AS(dft_forward(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(dft_inverse_real(std::vector<Cplx>{}), std::invalid_argument);

    PatternSet tiny;
    tiny.frames.assign(2, Grid(2, 2, 0.0));
    CHECK_THROWS_AS(dft_pixelwise(tiny), std::invalid_argument);
}
