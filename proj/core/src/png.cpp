#include "positroid/png.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "positroid/errors.hpp"

namespace positroid {

namespace {

std::uint32_t crc32_table_entry(std::uint32_t i) {
  std::uint32_t c = i;
  for (int b = 0; b < 8; ++b) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
  return c;
}

std::uint32_t crc32(const std::uint8_t* data, std::size_t len, std::uint32_t crc = 0) {
  static std::uint32_t table[256];
  static bool init = false;
  if (!init) {
    for (std::uint32_t i = 0; i < 256; ++i) table[i] = crc32_table_entry(i);
    init = true;
  }
  std::uint32_t c = crc ^ 0xffffffffu;
  for (std::size_t i = 0; i < len; ++i) c = table[(c ^ data[i]) & 0xffu] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

std::uint32_t adler32(const std::uint8_t* data, std::size_t len) {
  std::uint32_t a = 1, b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    a = (a + data[i]) % 65521u;
    b = (b + a) % 65521u;
  }
  return (b << 16) | a;
}

void push_u32(std::vector<std::uint8_t>& v, std::uint32_t x) {
  v.push_back(static_cast<std::uint8_t>(x >> 24));
  v.push_back(static_cast<std::uint8_t>(x >> 16));
  v.push_back(static_cast<std::uint8_t>(x >> 8));
  v.push_back(static_cast<std::uint8_t>(x));
}

void push_chunk(std::vector<std::uint8_t>& out, const char type[4],
                const std::vector<std::uint8_t>& payload) {
  push_u32(out, static_cast<std::uint32_t>(payload.size()));
  std::vector<std::uint8_t> body;
  body.insert(body.end(), type, type + 4);
  body.insert(body.end(), payload.begin(), payload.end());
  out.insert(out.end(), body.begin(), body.end());
  push_u32(out, crc32(body.data(), body.size()));
}

}  // namespace

std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& pixels) {
  if (width <= 0 || height <= 0) throw Error("png: empty image");
  if (pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3)
    throw Error("png: pixel buffer size mismatch");

  // raw scanlines, filter byte 0 per row
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(height) * (static_cast<std::size_t>(width) * 3 + 1));
  for (int y = 0; y < height; ++y) {
    raw.push_back(0);
    const std::uint8_t* row = pixels.data() + static_cast<std::size_t>(y) * width * 3;
    raw.insert(raw.end(), row, row + static_cast<std::size_t>(width) * 3);
  }

  // zlib stream: header, stored deflate blocks of at most 65535 bytes, adler
  std::vector<std::uint8_t> z;
  z.push_back(0x78);
  z.push_back(0x01);
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t len = std::min<std::size_t>(65535, raw.size() - pos);
    bool last = pos + len == raw.size();
    z.push_back(last ? 1 : 0);
    z.push_back(static_cast<std::uint8_t>(len & 0xff));
    z.push_back(static_cast<std::uint8_t>(len >> 8));
    z.push_back(static_cast<std::uint8_t>(~len & 0xff));
    z.push_back(static_cast<std::uint8_t>((~len >> 8) & 0xff));
    z.insert(z.end(), raw.begin() + static_cast<std::ptrdiff_t>(pos),
             raw.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  push_u32(z, adler32(raw.data(), raw.size()));

  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  std::vector<std::uint8_t> ihdr;
  push_u32(ihdr, static_cast<std::uint32_t>(width));
  push_u32(ihdr, static_cast<std::uint32_t>(height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type RGB
  ihdr.push_back(0);
  ihdr.push_back(0);
  ihdr.push_back(0);
  push_chunk(out, "IHDR", ihdr);
  push_chunk(out, "IDAT", z);
  push_chunk(out, "IEND", {});
  return out;
}

void write_png_rgb(const std::string& path, int width, int height,
                   const std::vector<std::uint8_t>& pixels) {
  auto bytes = encode_png_rgb(width, height, pixels);
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
}

void diverging_color(double v, std::uint8_t rgb[3]) {
  v = std::max(-1.0, std::min(1.0, v));
  double r, g, b;
  if (v < 0) {
    double t = v + 1;  // 0 at -1, 1 at 0
    r = 0.23 + 0.77 * t;
    g = 0.30 + 0.70 * t;
    b = 0.75 + 0.25 * t;
  } else {
    double t = v;  // 0 at 0, 1 at 1
    r = 1.0 - 0.30 * t;
    g = 1.0 - 0.85 * t;
    b = 1.0 - 0.86 * t;
  }
  rgb[0] = static_cast<std::uint8_t>(std::lround(255 * r));
  rgb[1] = static_cast<std::uint8_t>(std::lround(255 * g));
  rgb[2] = static_cast<std::uint8_t>(std::lround(255 * b));
}

}  // namespace positroid
