#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fringe/decode.hpp"
#include "fringe/halftone.hpp"
#include "fringe/optics.hpp"
#include "fringe/patterns.hpp"

using namespace fringe;

namespace {

PatternSpec single_spec(int w = 80, int h = 480) {
    PatternSpec s;
    s.mode = PatternMode::Single;
    s.frames = 8;
    s.width = w;
    s.height = h;
    return s;
}

PatternSpec dual_spec(int w = 80, int h = 480) {
    PatternSpec s;
    s.mode = PatternMode::Dual;
    s.frames = 8;
    s.width = w;
    s.height = h;
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// phase extraction
// ---------------------------------------------------------------------------

TEST_CASE("phase follows the complex argument, wrapped to [0,360)") {
    SpectralField f(4, 2, 2);
    f.at(1, 0, 0) = Cplx{0.0, 5.0};    // straight up
    f.at(1, 1, 0) = Cplx{-3.0, 0.0};   // left
    f.at(1, 0, 1) = Cplx{5.0, -5.0};   // fourth quadrant
    f.at(1, 1, 1) = Cplx{0.0, 0.0};    // undefined

    const PhaseMap pm = phase_map(f, 1);
    CHECK(pm.degrees.at(0, 0) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(pm.degrees.at(1, 0) == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(pm.degrees.at(0, 1) == doctest::Approx(315.0).epsilon(1e-12));
    CHECK(pm.degrees.at(1, 1) == 0.0);

    CHECK(pm.valid.at(0, 0) == 1.0);
    CHECK(pm.valid.at(1, 1) == 0.0);

    CHECK_THROWS_AS(phase_map(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(phase_map(f, 4), std::invalid_argument);
}

TEST_CASE("contone patterns decode to the ideal ramp") {
    const PatternSpec s = single_spec();
    const PatternSet set = make_patterns(s);
    const PhaseMap pm = phase_map(dft_pixelwise(set), 1);
    const auto rep = wrapped_abs_error(pm.degrees, ideal_phase_map(s, 1));
    CHECK(rep.mae_deg < 1e-6);

    const PatternSpec d = dual_spec();
    const PatternSet dset = make_patterns(d);
    const SpectralField df = dft_pixelwise(dset);
    CHECK(wrapped_abs_error(phase_map(df, 1).degrees, ideal_phase_map(d, 1)).mae_deg < 1e-6);
    CHECK(wrapped_abs_error(phase_map(df, 2).degrees, ideal_phase_map(d, 2)).mae_deg < 1e-6);
}

TEST_CASE("defocus does not bias the contone phase") {
    const Kernel k = gaussian_kernel(15, 2.0);

    const PatternSpec s = single_spec();
    const PatternSet blurred = defocus_set(make_patterns(s), k);
    const PhaseMap pm = phase_map(dft_pixelwise(blurred), 1);
    CHECK(wrapped_abs_error(pm.degrees, ideal_phase_map(s, 1)).mae_deg < 1e-6);

    const PatternSpec d = dual_spec();
    const PatternSet dblur = defocus_set(make_patterns(d), k);
    CHECK(wrapped_abs_error(phase_map(dft_pixelwise(dblur), 2).degrees,
                            ideal_phase_map(d, 2)).mae_deg < 1e-6);
}

TEST_CASE("magnitude recovers the modulation amplitude") {
    const PatternSet set = make_patterns(single_spec(6, 48));
    const SpectralField f = dft_pixelwise(set);

    const Grid raw = magnitude_map(f, 1);
    const Grid scaled = magnitude_map(f, 1, true);
    for (int y = 0; y < 48; ++y)
        for (int x = 0; x < 6; ++x) {
            CHECK(raw.at(x, y) == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(scaled.at(x, y) == doctest::Approx(0.5).epsilon(1e-12));
        }

    const PatternSet dset = make_patterns(dual_spec(6, 48));
    const SpectralField df = dft_pixelwise(dset);
    const Grid m1 = magnitude_map(df, 1, true);
    const Grid m2 = magnitude_map(df, 2, true);
    for (int y = 0; y < 48; ++y) {
        CHECK(m1.at(0, y) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(m2.at(0, y) == doctest::Approx(0.25).epsilon(1e-12));
    }

    CHECK_THROWS_AS(magnitude_map(f, 8), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// wrapped error
// ---------------------------------------------------------------------------

TEST_CASE("errors wrap around the circle") {
    Grid m(3, 1), t(3, 1);
    m.at(0, 0) = 359.0; t.at(0, 0) = 1.0;
    m.at(1, 0) = 90.0;  t.at(1, 0) = 90.0;
    m.at(2, 0) = 0.0;   t.at(2, 0) = 180.0;

    const auto rep = wrapped_abs_error(m, t);
    CHECK(rep.error_map.at(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.error_map.at(1, 0) == 0.0);
    CHECK(rep.error_map.at(2, 0) == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(rep.mae_deg == doctest::Approx(182.0 / 3.0).epsilon(1e-12));

    const double expected_rms =
        std::sqrt((4.0 + 0.0 + 32400.0) / 3.0) * std::numbers::pi / 180.0;
    CHECK(rep.rms_rad == doctest::Approx(expected_rms).epsilon(1e-12));
}

TEST_CASE("mask restricts the statistics but not the map") {
    Grid m(2, 1), t(2, 1), mask(2, 1, 1.0);
    m.at(0, 0) = 10.0; t.at(0, 0) = 0.0;
    m.at(1, 0) = 50.0; t.at(1, 0) = 0.0;
    mask.at(1, 0) = 0.0;

    const auto rep = wrapped_abs_error(m, t, &mask);
    CHECK(rep.mae_deg == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(rep.error_map.at(1, 0) == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("error reporting rejects shape mismatches") {
    Grid a(2, 2), b(3, 2), mask(3, 3);
    CHECK_THROWS_AS(wrapped_abs_error(a, b), std::runtime_error);
    CHECK_THROWS_AS(wrapped_abs_error(a, a, &mask), std::runtime_error);
}

// ---------------------------------------------------------------------------
// residual spectral power
// ---------------------------------------------------------------------------

TEST_CASE("identical sets have zero residual under the identity kernel") {
    const PatternSet set = white_noise_dither(make_patterns(single_spec(12, 16)), 3);
    const auto p = residual_power(set, set, gaussian_kernel(1, 1.0));
    REQUIRE(p.size() == 8);
    for (double v : p) CHECK(v == 0.0);
}

TEST_CASE("residual power matches a direct computation") {
    const PatternSet contone = make_patterns(single_spec(5, 12));
    const PatternSet binary = white_noise_dither(contone, 7);
    const Kernel k = gaussian_kernel(3, 0.8);

    const auto got = residual_power(contone, binary, k);

    const SpectralField fc = dft_pixelwise(contone);
    const SpectralField fb = dft_pixelwise(defocus_set(binary, k));
    for (int kk = 0; kk < 8; ++kk) {
        double acc = 0.0;
        for (int y = 0; y < 12; ++y)
            for (int x = 0; x < 5; ++x)
                acc += std::norm(fc.at(kk, x, y) - fb.at(kk, x, y));
        CHECK(got[kk] == doctest::Approx(acc / (5.0 * 12.0 * 64.0)).epsilon(1e-12));
    }

    PatternSet shrunk = binary;
    shrunk.frames.pop_back();
    CHECK_THROWS_AS(residual_power(contone, shrunk, k), std::runtime_error);
}

// ---------------------------------------------------------------------------
// gradients
// ---------------------------------------------------------------------------

TEST_CASE("the ideal ramp has a constant row gradient") {
    const PatternSpec s = single_spec(4, 480);
    const Grid g = gradient_map(ideal_phase_map(s, 1));
    for (int y = 0; y < 480; ++y)
        for (int x = 0; x < 4; ++x)
            CHECK(g.at(x, y) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("constant phase has zero gradient") {
    const Grid g = gradient_map(Grid(6, 5, 123.4));
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 6; ++x)
            CHECK(g.at(x, y) == 0.0);
}

TEST_CASE("noisy phase shows a rougher gradient than the ideal") {
    const PatternSpec s = single_spec(40, 96);
    const PatternSet contone = make_patterns(s);
    const PatternSet binary = white_noise_dither(contone, 5);
    const Kernel k = gaussian_kernel(5, 1.2);

    const Grid ideal = gradient_map(phase_map(dft_pixelwise(defocus_set(contone, k)), 1).degrees);
    const Grid noisy = gradient_map(phase_map(dft_pixelwise(defocus_set(binary, k)), 1).degrees);

    auto roughness = [](const Grid& g) {
        double acc = 0.0;
        for (size_t i = 0; i < g.size(); ++i) {
            const double d = g.data()[i] - 360.0 / 96.0;
            acc += d * d;
        }
        return acc / g.size();
    };
    CHECK(roughness(noisy) > 10.0 * roughness(ideal));
}

TEST_CASE("gradient render recenters to the unit interval") {
    Grid g(2, 1);
    g.at(0, 0) = 0.0;
    g.at(1, 0) = 90.0;
    const Grid r = gradient_render(g);
    CHECK(r.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.at(1, 0) == doctest::Approx(0.75).epsilon(1e-12));
}

// ---------------------------------------------------------------------------
// tiling neutrality
// ---------------------------------------------------------------------------

TEST_CASE("decoding a tiled set reproduces the phase columns exactly") {
    const PatternSet contone = make_patterns(single_spec(16, 64));
    const PatternSet binary = white_noise_dither(contone, 9);
    const Kernel k = gaussian_kernel(5, 1.2);

    const Grid base = phase_map(dft_pixelwise(defocus_set(binary, k)), 1).degrees;
    const PatternSet tiled = tile_horizontal(binary, 3);
    const Grid wide = phase_map(dft_pixelwise(defocus_set(tiled, k)), 1).degrees;

    REQUIRE(wide.width() == 48);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 48; ++x)
            CHECK(wide.at(x, y) == base.at(x % 16, y));
}
