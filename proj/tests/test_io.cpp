#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "fringe/manifest.hpp"
#include "fringe/pnm.hpp"

using namespace fringe;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        const fs::path p = fs::temp_directory_path() / "fringe_io_test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

// ---------------------------------------------------------------------------
// graymaps
// ---------------------------------------------------------------------------

TEST_CASE("binary grids survive a graymap round trip") {
    std::mt19937 rng(51);
    Grid g(23, 17);
    for (int y = 0; y < 17; ++y)
        for (int x = 0; x < 23; ++x)
            g.at(x, y) = (rng() & 1u) ? 1.0 : 0.0;

    const fs::path p = temp_dir() / "binary.pgm";
    write_pgm(p, g);
    const Grid back = read_pgm(p);
    CHECK(back == g);
}

TEST_CASE("contone grids round-trip within one quantization step") {
    std::mt19937 rng(52);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Grid g(16, 9);
    for (int y = 0; y < 9; ++y)
        for (int x = 0; x < 16; ++x)
            g.at(x, y) = dist(rng);

    const fs::path p = temp_dir() / "contone.pgm";
    write_pgm(p, g);
    const Grid back = read_pgm(p);
    REQUIRE(back.same_dims(g));
    for (int y = 0; y < 9; ++y)
        for (int x = 0; x < 16; ++x)
            CHECK(std::abs(back.at(x, y) - g.at(x, y)) <= 0.5 / 255.0 + 1e-12);
}

TEST_CASE("graymap headers tolerate comments") {
    const fs::path p = temp_dir() / "commented.pgm";
    {
        std::ofstream out(p, std::ios::binary);
        out << "P5\n# produced by hand\n3 2\n# maxval next\n255\n";
        const char pixels[6] = {0, 51, 102, (char)153, (char)204, (char)255};
        out.write(pixels, 6);
    }
    const Grid g = read_pgm(p);
    REQUIRE(g.width() == 3);
    REQUIRE(g.height() == 2);
    CHECK(g.at(0, 0) == 0.0);
    CHECK(g.at(1, 0) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(g.at(2, 1) == 1.0);
}

TEST_CASE("malformed graymaps are rejected") {
    const fs::path ascii = temp_dir() / "ascii.pgm";
    std::ofstream(ascii) << "P2\n2 2\n255\n0 0 0 0\n";
    CHECK_THROWS_AS(read_pgm(ascii), std::runtime_error);

    const fs::path deep = temp_dir() / "deep.pgm";
    std::ofstream(deep, std::ios::binary) << "P5\n2 2\n65535\n";
    CHECK_THROWS_AS(read_pgm(deep), std::runtime_error);

    const fs::path cut = temp_dir() / "cut.pgm";
    std::ofstream(cut, std::ios::binary) << "P5\n4 4\n255\nab";
    CHECK_THROWS_AS(read_pgm(cut), std::runtime_error);

    CHECK_THROWS_AS(read_pgm(temp_dir() / "missing.pgm"), std::runtime_error);
}

// ---------------------------------------------------------------------------
// pixmaps and renders
// ---------------------------------------------------------------------------

TEST_CASE("pixmap writer emits a valid header and raw bytes") {
    const std::vector<uint8_t> rgb{10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120};
    const fs::path p = temp_dir() / "img.ppm";
    write_ppm(p, 2, 2, rgb);
    const std::string data = slurp(p);
    REQUIRE(data.size() == 11 + 12);
    CHECK(data.substr(0, 11) == "P6\n2 2\n255\n");
    CHECK(static_cast<uint8_t>(data[11]) == 10);
    CHECK(static_cast<uint8_t>(data[22]) == 120);

    CHECK_THROWS_AS(write_ppm(p, 3, 2, rgb), std::invalid_argument);
}

TEST_CASE("hue wheel hits the primaries") {
    Grid phase(3, 1);
    phase.at(0, 0) = 0.0;
    phase.at(1, 0) = 120.0;
    phase.at(2, 0) = 240.0;
    const auto rgb = phase_to_rgb(phase);
    REQUIRE(rgb.size() == 9);
    CHECK(rgb[0] == 255); CHECK(rgb[1] == 0);   CHECK(rgb[2] == 0);
    CHECK(rgb[3] == 0);   CHECK(rgb[4] == 255); CHECK(rgb[5] == 0);
    CHECK(rgb[6] == 0);   CHECK(rgb[7] == 0);   CHECK(rgb[8] == 255);
}

TEST_CASE("grayscale render is neutral") {
    Grid v(3, 1);
    v.at(0, 0) = 0.0;
    v.at(1, 0) = 0.5;
    v.at(2, 0) = 1.0;
    const auto rgb = unit_to_rgb(v);
    REQUIRE(rgb.size() == 9);
    CHECK(rgb[0] == 0);
    CHECK(rgb[3] == 128);
    CHECK(rgb[4] == 128);
    CHECK(rgb[8] == 255);
}

// ---------------------------------------------------------------------------
// manifests
// ---------------------------------------------------------------------------

TEST_CASE("manifests round-trip through json") {
    RunManifest m;
    m.mode = "dual";
    m.frames = 12;
    m.width = 320;
    m.height = 240;
    m.f_high = 6;
    m.algorithm = "phasedbs";
    m.kernel_size = 15;
    m.sigma = 2.0;
    m.weights = "k12";
    m.solver = "exhaustive";
    m.passes = 28;
    m.order = 0;
    m.coeff = 2;
    m.seed = 987654321;
    m.input_dir = "in";
    m.output_dir = "out";
    m.mae_deg = 0.44;
    m.rms_rad = 0.0077;
    m.power = {1.0, 2.0, 3.0};
    m.duration_s = 12.5;

    const RunManifest back = RunManifest::from_json(m.to_json());
    CHECK(back.mode == m.mode);
    CHECK(back.frames == m.frames);
    CHECK(back.width == m.width);
    CHECK(back.height == m.height);
    CHECK(back.f_high == m.f_high);
    CHECK(back.algorithm == m.algorithm);
    CHECK(back.kernel_size == m.kernel_size);
    CHECK(back.sigma == m.sigma);
    CHECK(back.weights == m.weights);
    CHECK(back.solver == m.solver);
    CHECK(back.passes == m.passes);
    CHECK(back.order == m.order);
    CHECK(back.coeff == m.coeff);
    CHECK(back.seed == m.seed);
    CHECK(back.input_dir == m.input_dir);
    CHECK(back.output_dir == m.output_dir);
    CHECK(back.mae_deg == m.mae_deg);
    CHECK(back.rms_rad == m.rms_rad);
    CHECK(back.power == m.power);
    CHECK(back.duration_s == m.duration_s);
}

TEST_CASE("metrics schema is stable") {
    RunManifest m;
    const auto j = m.metrics_json();
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>{
        "algorithm", "frames", "width", "height", "kernel_size", "sigma",
        "weights", "passes", "seed", "coeff", "mae_deg", "rms_rad",
        "power", "duration_s"});
}

TEST_CASE("manifest files are byte-stable") {
    RunManifest m;
    m.algorithm = "bayer";
    m.order = 8;
    const fs::path a = temp_dir() / "a.json";
    const fs::path b = temp_dir() / "b.json";
    m.save(a);
    m.save(b);
    CHECK(slurp(a) == slurp(b));

    const RunManifest back = RunManifest::load(a);
    CHECK(back.algorithm == "bayer");
    CHECK(back.order == 8);
}

TEST_CASE("garbage json is reported as a data error") {
    const fs::path p = temp_dir() / "broken.json";
    std::ofstream(p) << "{ not json";
    CHECK_THROWS_AS(load_json(p), std::runtime_error);
    CHECK_THROWS_AS(load_json(temp_dir() / "absent.json"), std::runtime_error);
}
