#include "floorplan/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace floorplan::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const char* suffix) {
    const std::size_t n = std::strlen(suffix);
    if (s.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (std::tolower(static_cast<unsigned char>(s[s.size() - n + i])) != suffix[i]) return false;
    return true;
}

Grid load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw format_error("cannot open image file: " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw format_error("not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw format_error("libpng init failed");
    }
    std::vector<png_bytep> row_ptrs;
    Grid grid;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw format_error("PNG decode error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (color != PNG_COLOR_TYPE_GRAY || depth > 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw format_error("unsupported PNG format (need 8-bit grayscale): " + path);
    }
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    grid.width = static_cast<int>(png_get_image_width(png, info));
    grid.height = static_cast<int>(png_get_image_height(png, info));
    grid.cells.resize(static_cast<std::size_t>(grid.width) * grid.height);
    row_ptrs.resize(grid.height);
    for (int y = 0; y < grid.height; ++y)
        row_ptrs[y] = grid.cells.data() + static_cast<std::size_t>(y) * grid.width;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return grid;
}

void skip_pgm_whitespace(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

Grid load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open image file: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5") throw format_error("not a PGM file: " + path);
    int w = 0, h = 0, maxval = 0;
    skip_pgm_whitespace(in);
    in >> w;
    skip_pgm_whitespace(in);
    in >> h;
    skip_pgm_whitespace(in);
    in >> maxval;
    if (!in || w <= 0 || h <= 0) throw format_error("bad PGM header: " + path);
    if (maxval > 255) throw format_error("unsupported bit depth (PGM maxval > 255): " + path);

    Grid grid(w, h);
    if (magic == "P5") {
        in.get();  // single whitespace after maxval
        in.read(reinterpret_cast<char*>(grid.cells.data()), static_cast<std::streamsize>(grid.cells.size()));
        if (in.gcount() != static_cast<std::streamsize>(grid.cells.size()))
            throw format_error("truncated PGM data: " + path);
    } else {
        for (auto& cell : grid.cells) {
            int v;
            in >> v;
            if (!in) throw format_error("truncated PGM data: " + path);
            cell = static_cast<std::uint8_t>(v);
        }
    }
    return grid;
}

}  // namespace

Grid load_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw format_error("cannot open image file: " + path);
    char sig[2] = {0, 0};
    probe.read(sig, 2);
    probe.close();
    if (sig[0] == 'P' && (sig[1] == '2' || sig[1] == '5')) return load_pgm(path);
    return load_png(path);
}

void save_png(const Grid& grid, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw format_error("cannot write image file: " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw format_error("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw format_error("PNG encode error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, grid.width, grid.height, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(grid.height);
    std::vector<std::uint8_t> cells = grid.cells;
    for (int y = 0; y < grid.height; ++y)
        rows[y] = cells.data() + static_cast<std::size_t>(y) * grid.width;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_pgm(const Grid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write image file: " + path);
    out << "P5\n" << grid.width << " " << grid.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(grid.cells.data()),
              static_cast<std::streamsize>(grid.cells.size()));
}

void save_image(const Grid& grid, const std::string& path) {
    if (has_suffix(path, ".pgm")) {
        save_pgm(grid, path);
    } else if (has_suffix(path, ".png")) {
        save_png(grid, path);
    } else {
        throw format_error("unknown image extension (want .png or .pgm): " + path);
    }
}

}  // namespace floorplan::io
