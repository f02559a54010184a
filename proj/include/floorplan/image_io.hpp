#pragma once

#include <string>

#include "floorplan/grid.hpp"

namespace floorplan::io {

// Reads an 8-bit single-channel image (PNG grayscale or PGM, ASCII or
// binary). Pixel values become grid labels verbatim; the palette is left
// empty for the caller to fill. Throws format_error on unreadable files,
// color images, or bit depths above 8.
Grid load_image(const std::string& path);

// Writes grid labels as an 8-bit grayscale image; format picked from the
// file extension (.png or .pgm).
void save_image(const Grid& grid, const std::string& path);

void save_png(const Grid& grid, const std::string& path);
void save_pgm(const Grid& grid, const std::string& path);

}  // namespace floorplan::io
