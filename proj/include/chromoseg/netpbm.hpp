/* Copyright 2026 The chromoseg Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "chromoseg/raster.hpp"

namespace chromoseg {

/// Parse failure with the byte offset where decoding stopped making sense.
class PnmParseError : public std::runtime_error {
 public:
  PnmParseError(size_t offset, const std::string& what)
      : std::runtime_error("PNM parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

using DecodedImage = std::variant<BinaryImage, GrayImage>;

namespace pnm_detail {

struct Cursor {
  std::string_view data;
  size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  char peek() const { return data[pos]; }

  [[noreturn]] void fail(const std::string& msg) const { throw PnmParseError(pos, msg); }

  // Netpbm whitespace; '#' starts a comment running to end of line.
  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
        ++pos;
      } else {
        return;
      }
    }
  }

  int read_uint(const char* what) {
    skip_space_and_comments();
    if (eof()) fail(std::string("unexpected end of data, expected ") + what);
    if (peek() < '0' || peek() > '9') fail(std::string("expected ") + what);
    long v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000L) fail(std::string("value out of range for ") + what);
      ++pos;
    }
    return static_cast<int>(v);
  }

  // Exactly one whitespace byte separates the maxval/size line from raw raster.
  void expect_single_space() {
    if (eof()) fail("unexpected end of data before raster");
    const char c = peek();
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') fail("expected whitespace before raster");
    ++pos;
  }
};

}  // namespace pnm_detail

/// Decodes P1/P4 PBM as BinaryImage (1 = foreground) and P2/P5 PGM (maxval
/// <= 255) as GrayImage. Header comments are honored. Throws PnmParseError.
inline DecodedImage decode_pnm(std::string_view bytes) {
  pnm_detail::Cursor c{bytes};
  if (bytes.size() < 2 || bytes[0] != 'P') c.fail("missing PNM magic");
  const char kind = bytes[1];
  c.pos = 2;
  if (kind != '1' && kind != '2' && kind != '4' && kind != '5') {
    c.pos = 1;
    c.fail("unsupported PNM type (want P1, P2, P4 or P5)");
  }

  const int width = c.read_uint("width");
  const int height = c.read_uint("height");
  if (width <= 0 || height <= 0) c.fail("dimensions must be positive");
  const size_t n = static_cast<size_t>(width) * height;

  if (kind == '1') {
    BinaryImage img(width, height);
    // P1 digits need not be separated by whitespace.
    for (size_t i = 0; i < n; ++i) {
      c.skip_space_and_comments();
      if (c.eof()) c.fail("truncated P1 raster");
      const char ch = c.peek();
      if (ch != '0' && ch != '1') c.fail("P1 raster digit must be 0 or 1");
      img.pixels[i] = (ch == '1') ? 1 : 0;
      ++c.pos;
    }
    return img;
  }

  if (kind == '4') {
    c.expect_single_space();
    BinaryImage img(width, height);
    const int row_bytes = (width + 7) / 8;
    for (int y = 0; y < height; ++y) {
      if (c.pos + row_bytes > bytes.size()) {
        c.pos = bytes.size();
        c.fail("truncated P4 raster");
      }
      for (int x = 0; x < width; ++x) {
        const uint8_t byte = static_cast<uint8_t>(bytes[c.pos + x / 8]);
        img.set(x, y, (byte >> (7 - x % 8)) & 1);
      }
      c.pos += row_bytes;
    }
    return img;
  }

  const int maxval = c.read_uint("maxval");
  if (maxval <= 0) c.fail("maxval must be positive");
  if (maxval > 255) c.fail("maxval > 255 unsupported");

  GrayImage img(width, height);
  if (kind == '2') {
    for (size_t i = 0; i < n; ++i) {
      const int v = c.read_uint("P2 sample");
      if (v > maxval) c.fail("P2 sample exceeds maxval");
      img.pixels[i] = static_cast<uint8_t>(v);
    }
  } else {  // P5
    c.expect_single_space();
    if (c.pos + n > bytes.size()) {
      c.pos = bytes.size();
      c.fail("truncated P5 raster");
    }
    for (size_t i = 0; i < n; ++i) img.pixels[i] = static_cast<uint8_t>(bytes[c.pos + i]);
    c.pos += n;
  }
  return img;
}

inline std::string encode_pbm(const BinaryImage& img, bool ascii = false) {
  std::string out;
  if (ascii) {
    out = "P1\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        out += img.at(x, y) ? '1' : '0';
        out += (x + 1 == img.width) ? '\n' : ' ';
      }
    }
    return out;
  }
  out = "P4\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
  const int row_bytes = (img.width + 7) / 8;
  for (int y = 0; y < img.height; ++y) {
    std::string row(row_bytes, '\0');
    for (int x = 0; x < img.width; ++x)
      if (img.at(x, y)) row[x / 8] |= static_cast<char>(0x80 >> (x % 8));
    out += row;
  }
  return out;
}

inline std::string encode_pgm(const GrayImage& img, bool ascii = false) {
  std::string out = ascii ? "P2" : "P5";
  out += "\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  if (ascii) {
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        out += std::to_string(img.at(x, y));
        out += (x + 1 == img.width) ? '\n' : ' ';
      }
    }
  } else {
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  }
  return out;
}

/// Label map as PGM, pixel value = label id. Requires max label <= 255.
inline std::string encode_label_map(const LabelMap& map, bool ascii = false) {
  const uint32_t k = map.max_label();
  if (k > 255)
    throw std::domain_error("encode_label_map: " + std::to_string(k) +
                            " labels exceed 8-bit PGM range");
  GrayImage img(map.width, map.height);
  for (size_t i = 0; i < map.labels.size(); ++i)
    img.pixels[i] = static_cast<uint8_t>(map.labels[i]);
  return encode_pgm(img, ascii);
}

}  // namespace chromoseg
