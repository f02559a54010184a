#include "floorplan/raster.hpp"

#include <vector>

#include "floorplan/image_io.hpp"

namespace floorplan::raster {

BinaryMask mask_from_grid(const Grid& grid, const std::set<int>& foreground_labels) {
    BinaryMask mask(grid.width, grid.height);
    const std::size_t n = grid.cells.size();
    for (std::size_t i = 0; i < n; ++i)
        mask.bits[i] = foreground_labels.count(grid.cells[i]) ? 1 : 0;
    return mask;
}

BinaryMask load_mask(const std::string& path, const std::set<int>& foreground_labels) {
    return mask_from_grid(io::load_image(path), foreground_labels);
}

namespace {

// Neighborhood in Zhang-Suen order: P2..P9 clockwise from north.
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

struct NeighborState {
    int b = 0;       // foreground neighbor count
    int a = 0;       // 0->1 transitions in P2..P9,P2
    bool p[8] = {};  // P2..P9
};

inline NeighborState neighbors(const BinaryMask& m, int x, int y) {
    NeighborState s;
    for (int k = 0; k < 8; ++k) {
        s.p[k] = m.at_or_false(x + kDx[k], y + kDy[k]);
        s.b += s.p[k] ? 1 : 0;
    }
    for (int k = 0; k < 8; ++k)
        if (!s.p[k] && s.p[(k + 1) % 8]) ++s.a;
    return s;
}

// Deletion rule for one subiteration. pass 0 uses (P2*P4*P6, P4*P6*P8),
// pass 1 uses (P2*P4*P8, P2*P6*P8).
inline bool removable(const BinaryMask& m, int x, int y, int pass) {
    if (!m.get(x, y)) return false;
    const NeighborState s = neighbors(m, x, y);
    if (s.b < 2 || s.b > 6 || s.a != 1) return false;
    const bool p2 = s.p[0], p4 = s.p[2], p6 = s.p[4], p8 = s.p[6];
    if (pass == 0) return !(p2 && p4 && p6) && !(p4 && p6 && p8);
    return !(p2 && p4 && p8) && !(p2 && p6 && p8);
}

template <bool Parallel>
BinaryMask thin_impl(const BinaryMask& mask) {
    BinaryMask cur = mask;
    const int w = cur.width, h = cur.height;
    if (w == 0 || h == 0) return cur;
    std::vector<std::uint8_t> marked(cur.bits.size());

    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            // Candidate marking against the image state at subiteration start.
#pragma omp parallel for schedule(static) if (Parallel)
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x)
                    marked[static_cast<std::size_t>(y) * w + x] =
                        removable(cur, x, y, pass) ? 1 : 0;
            }
            // Raster-order delete with recheck on the partially updated image;
            // a marked pixel whose neighborhood was already altered stays.
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    if (!marked[static_cast<std::size_t>(y) * w + x]) continue;
                    if (removable(cur, x, y, pass)) {
                        cur.set(x, y, false);
                        changed = true;
                    }
                }
            }
        }
    }
    return cur;
}

}  // namespace

BinaryMask thin(const BinaryMask& mask) { return thin_impl<true>(mask); }

}  // namespace floorplan::raster

namespace floorplan::serial {

BinaryMask thin(const BinaryMask& mask) { return raster::thin_impl<false>(mask); }

}  // namespace floorplan::serial
