#pragma once

#include <cstdint>

#include "physarum/error.hpp"
#include "physarum/grid.hpp"

namespace physarum {

// Single-occupancy particle grid: each cell holds at most one particle id.
class OccupancyGrid {
public:
    static constexpr std::int32_t kEmpty = -1;

    OccupancyGrid() = default;
    OccupancyGrid(int width, int height) : cells_(width, height, kEmpty) {}

    int width() const { return cells_.width(); }
    int height() const { return cells_.height(); }

    bool in_bounds(int x, int y) const { return cells_.in_bounds(x, y); }
    bool vacant(int x, int y) const { return in_bounds(x, y) && cells_.at(x, y) == kEmpty; }
    std::int32_t occupant(int x, int y) const { return cells_.at(x, y); }

    void insert(int x, int y, std::int32_t id) {
        PHYSARUM_CHECK(cells_.at(x, y) == kEmpty, "cell already occupied");
        cells_.at(x, y) = id;
        ++count_;
    }

    void remove(int x, int y, std::int32_t id) {
        PHYSARUM_CHECK(cells_.at(x, y) == id, "cell does not hold this particle");
        cells_.at(x, y) = kEmpty;
        --count_;
    }

    void relocate(int from_x, int from_y, int to_x, int to_y, std::int32_t id) {
        PHYSARUM_CHECK(cells_.at(from_x, from_y) == id, "source cell mismatch");
        PHYSARUM_CHECK(cells_.at(to_x, to_y) == kEmpty, "destination occupied");
        cells_.at(from_x, from_y) = kEmpty;
        cells_.at(to_x, to_y) = id;
    }

    std::int64_t occupied_count() const { return count_; }
    std::int64_t capacity() const { return static_cast<std::int64_t>(cells_.size()); }

    // Occupied cells in the clipped window of half-width `half` centred on
    // (cx, cy), the centre cell included.
    int window_count(int cx, int cy, int half) const {
        const int x0 = cx - half < 0 ? 0 : cx - half;
        const int x1 = cx + half >= width() ? width() - 1 : cx + half;
        const int y0 = cy - half < 0 ? 0 : cy - half;
        const int y1 = cy + half >= height() ? height() - 1 : cy + half;
        int n = 0;
        for (int y = y0; y <= y1; ++y) {
            const std::int32_t* row = cells_.row(y);
            for (int x = x0; x <= x1; ++x) n += (row[x] != kEmpty);
        }
        return n;
    }


    const Grid<std::int32_t>& cells() const { return cells_; }

private:
    Grid<std::int32_t> cells_;
    std::int64_t count_ = 0;
};

}  // namespace physarum
