#include "fringe/pnm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

namespace fringe {

namespace {

uint8_t to_byte(double v) {
    long scaled = std::lround(255.0 * v);
    if (scaled < 0) scaled = 0;
    if (scaled > 255) scaled = 255;
    return static_cast<uint8_t>(scaled);
}

// skips whitespace and '#' comments, then reads one unsigned int
int read_header_int(std::istream& in, const std::filesystem::path& path) {
    for (;;) {
        const int ch = in.peek();
        if (ch == EOF) throw std::runtime_error("truncated header: " + path.string());
        if (std::isspace(ch)) {
            in.get();
            continue;
        }
        if (ch == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value)) throw std::runtime_error("bad header field: " + path.string());
    return value;
}

} // namespace

void write_pgm(const std::filesystem::path& path, const Grid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    std::vector<uint8_t> row(grid.width());
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) row[x] = to_byte(grid.at(x, y));
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Grid read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5')
        throw std::runtime_error("not a binary graymap: " + path.string());

    const int w = read_header_int(in, path);
    const int h = read_header_int(in, path);
    const int maxval = read_header_int(in, path);
    if (w < 1 || h < 1) throw std::runtime_error("bad dimensions: " + path.string());
    if (maxval != 255) throw std::runtime_error("expected 8-bit maxval 255: " + path.string());
    in.get(); // single whitespace after maxval

    Grid grid(w, h);
    std::vector<uint8_t> row(w);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size());
        if (!in) throw std::runtime_error("truncated pixel data: " + path.string());
        for (int x = 0; x < w; ++x) grid.at(x, y) = row[x] / 255.0;
    }
    return grid;
}

void write_ppm(const std::filesystem::path& path, int width, int height,
               const std::vector<uint8_t>& rgb) {
    if (rgb.size() != static_cast<size_t>(width) * height * 3)
        throw std::invalid_argument("write_ppm: buffer size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "P6\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data()), rgb.size());
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<uint8_t> phase_to_rgb(const Grid& phase_deg) {
    std::vector<uint8_t> rgb(phase_deg.size() * 3);
    size_t i = 0;
    for (int y = 0; y < phase_deg.height(); ++y)
        for (int x = 0; x < phase_deg.width(); ++x) {
            // hue wheel, full saturation
            const double hh = phase_deg.at(x, y) / 60.0; // [0, 6)
            const int sector = static_cast<int>(hh) % 6;
            const double f = hh - std::floor(hh);
            const double q = 1.0 - f;
            double r = 0, g = 0, b = 0;
            switch (sector) {
                case 0: r = 1; g = f; break;
                case 1: r = q; g = 1; break;
                case 2: g = 1; b = f; break;
                case 3: g = q; b = 1; break;
                case 4: r = f; b = 1; break;
                default: r = 1; b = q; break;
            }
            rgb[i++] = to_byte(r);
            rgb[i++] = to_byte(g);
            rgb[i++] = to_byte(b);
        }
    return rgb;
}

std::vector<uint8_t> unit_to_rgb(const Grid& values01) {
    std::vector<uint8_t> rgb(values01.size() * 3);
    size_t i = 0;
    for (int y = 0; y < values01.height(); ++y)
        for (int x = 0; x < values01.width(); ++x) {
            const uint8_t v = to_byte(values01.at(x, y));
            rgb[i++] = v;
            rgb[i++] = v;
            rgb[i++] = v;
        }
    return rgb;
}

} // namespace fringe
