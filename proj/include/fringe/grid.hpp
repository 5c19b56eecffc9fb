#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fringe {

// Row-major raster of doubles. Contone images hold values in [0,1],
// binary images hold exactly 0.0 or 1.0.
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, double fill = 0.0)
        : width_(width), height_(height),
          data_(static_cast<size_t>(width) * height, fill) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("grid dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    size_t size() const { return data_.size(); }

    double& at(int x, int y) { return data_[static_cast<size_t>(y) * width_ + x]; }
    double at(int x, int y) const { return data_[static_cast<size_t>(y) * width_ + x]; }

    // toroidal read, accepts any integer coordinates
    double wrap_at(int x, int y) const {
        x %= width_;
        if (x < 0) x += width_;
        y %= height_;
        if (y < 0) y += height_;
        return at(x, y);
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool same_dims(const Grid& o) const { return width_ == o.width_ && height_ == o.height_; }

    bool operator==(const Grid& o) const {
        return width_ == o.width_ && height_ == o.height_ && data_ == o.data_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

// A stack of N same-sized frames (one projector pattern per phase shift).
struct PatternSet {
    std::vector<Grid> frames;

    int count() const { return static_cast<int>(frames.size()); }
    int width() const { return frames.empty() ? 0 : frames[0].width(); }
    int height() const { return frames.empty() ? 0 : frames[0].height(); }

    bool operator==(const PatternSet& o) const { return frames == o.frames; }
};

inline bool is_binary(const Grid& g) {
    for (size_t i = 0; i < g.size(); ++i) {
        double v = g.data()[i];
        if (v != 0.0 && v != 1.0) return false;
    }
    return true;
}

inline bool is_binary(const PatternSet& set) {
    for (const auto& f : set.frames)
        if (!is_binary(f)) return false;
    return true;
}

inline bool is_contone(const Grid& g) {
    for (size_t i = 0; i < g.size(); ++i) {
        double v = g.data()[i];
        if (!(v >= 0.0 && v <= 1.0)) return false;
    }
    return true;
}

inline bool is_contone(const PatternSet& set) {
    for (const auto& f : set.frames)
        if (!is_contone(f)) return false;
    return true;
}

inline void require_same_dims(const PatternSet& a, const PatternSet& b, const char* what) {
    if (a.count() != b.count() || a.width() != b.width() || a.height() != b.height())
        throw std::runtime_error(std::string(what) + ": pattern set dimensions differ");
}

} // namespace fringe
