#pragma once

#include <cstddef>
#include <vector>

#include "physarum/error.hpp"

namespace physarum {

// Row-major 2D lattice with fixed dimensions. The y axis points "up" in the
// mathematical sense; file exporters decide their own row order.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, T init = T{})
        : width_(width), height_(height),
          cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), init) {
        PHYSARUM_CHECK(width > 0 && height > 0, "grid dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return cells_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    T& at(int x, int y) { return cells_[index(x, y)]; }
    const T& at(int x, int y) const { return cells_[index(x, y)]; }

    T value_or(int x, int y, T fallback) const {
        return in_bounds(x, y) ? cells_[index(x, y)] : fallback;
    }

    void fill(T v) { cells_.assign(cells_.size(), v); }

    T* row(int y) { return cells_.data() + static_cast<std::size_t>(y) * width_; }
    const T* row(int y) const { return cells_.data() + static_cast<std::size_t>(y) * width_; }

    std::vector<T>& data() { return cells_; }
    const std::vector<T>& data() const { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t index(int x, int y) const {
        PHYSARUM_CHECK(in_bounds(x, y), "grid access out of bounds");
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> cells_;
};

}  // namespace physarum
