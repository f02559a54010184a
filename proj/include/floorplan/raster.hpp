#pragma once

#include <set>
#include <string>

#include "floorplan/grid.hpp"

namespace floorplan::raster {

// Loads a label image and thresholds it into a wall mask: a pixel is
// foreground iff its label is in foreground_labels.
BinaryMask load_mask(const std::string& path, const std::set<int>& foreground_labels);

BinaryMask mask_from_grid(const Grid& grid, const std::set<int>& foreground_labels);

// Zhang-Suen two-subiteration thinning, iterated to a fixpoint. Candidate
// marking is data-parallel; marked pixels are then deleted in raster order
// with a recheck against the current image, which keeps the 8-connected
// component count of the foreground intact (a naive simultaneous delete can
// annihilate 2x2 blocks). Idempotent: at the fixpoint no pixel satisfies
// either subiteration's deletion rule.
BinaryMask thin(const BinaryMask& mask);

}  // namespace floorplan::raster

namespace floorplan::serial {

// Single-threaded counterpart of raster::thin with identical output,
// kept for tests and the kernel benchmark.
BinaryMask thin(const BinaryMask& mask);

}  // namespace floorplan::serial
