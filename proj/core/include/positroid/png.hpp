#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace positroid {

// Minimal 8-bit RGB PNG writer (zlib container with stored deflate blocks).
// pixels: row-major, 3 bytes per pixel, rows * cols * 3 entries.
std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& pixels);

void write_png_rgb(const std::string& path, int width, int height,
                   const std::vector<std::uint8_t>& pixels);

// diverging blue-white-red map for v in [-1, 1]
void diverging_color(double v, std::uint8_t rgb[3]);

}  // namespace positroid
