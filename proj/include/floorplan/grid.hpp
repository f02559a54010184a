#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace floorplan {

// Dense 2-D label raster. Cells are small non-negative class labels,
// row-major. The palette maps each label in use to a class name.
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells;
    std::map<int, std::string> palette;

    Grid() = default;
    Grid(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), cells(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const Grid& o) const {
        return width == o.width && height == o.height && cells == o.cells;
    }
};

// Validates the Grid invariants: cell storage matches dimensions and every
// cell label is present in the palette. Throws std::runtime_error.
void validate_grid(const Grid& grid);

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // 1 = foreground, 0 = background

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

    // Bounds-checked read treating everything outside the raster as background.
    bool at_or_false(int x, int y) const {
        if (x < 0 || y < 0 || x >= width || y >= height) return false;
        return get(x, y);
    }

    std::size_t count_foreground() const {
        std::size_t n = 0;
        for (std::uint8_t b : bits) n += b;
        return n;
    }

    bool operator==(const BinaryMask& o) const {
        return width == o.width && height == o.height && bits == o.bits;
    }
};

class format_error : public std::runtime_error {
  public:
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace floorplan
