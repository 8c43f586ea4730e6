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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace chromoseg {

// Shared coordinate convention: x = column rightward, y = row downward,
// origin at the top-left pixel. All modules use it.

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;  // raster order
  }
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline long long sq_dist(const Point& a, const Point& b) {
  const long long dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// 2x the signed area of triangle (o, a, b); exact in 64-bit for pixel coords.
inline long long cross2(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
         static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

struct BBox {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;  // inclusive; empty if max < min

  bool empty() const { return max_x < min_x || max_y < min_y; }
  int width() const { return empty() ? 0 : max_x - min_x + 1; }
  int height() const { return empty() ? 0 : max_y - min_y + 1; }

  void expand(const Point& p) {
    if (empty()) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
    } else {
      if (p.x < min_x) min_x = p.x;
      if (p.x > max_x) max_x = p.x;
      if (p.y < min_y) min_y = p.y;
      if (p.y > max_y) max_y = p.y;
    }
  }
  friend bool operator==(const BBox&, const BBox&) = default;
};

inline BBox bbox_of(std::span<const Point> pts) {
  BBox b;
  for (const Point& p : pts) b.expand(p);
  return b;
}

// Occupancy bitmap over a bbox with a margin of empty cells, used by the
// pixel-walking kernels (tracing, thinning, cuts). Queries outside the
// stored window read as empty.
class PixelGrid {
 public:
  PixelGrid() = default;

  PixelGrid(const BBox& box, int pad) {
    x0_ = box.min_x - pad;
    y0_ = box.min_y - pad;
    w_ = box.width() + 2 * pad;
    h_ = box.height() + 2 * pad;
    bits_.assign(static_cast<size_t>(w_) * h_, 0);
  }

  static PixelGrid from_pixels(std::span<const Point> pts, int pad = 1) {
    PixelGrid g(bbox_of(pts), pad);
    for (const Point& p : pts) g.set(p.x, p.y, true);
    return g;
  }

  bool at(int x, int y) const {
    x -= x0_;
    y -= y0_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return false;
    return bits_[static_cast<size_t>(y) * w_ + x] != 0;
  }
  bool at(const Point& p) const { return at(p.x, p.y); }

  void set(int x, int y, bool v) {
    x -= x0_;
    y -= y0_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return;
    bits_[static_cast<size_t>(y) * w_ + x] = v ? 1 : 0;
  }
  void set(const Point& p, bool v) { set(p.x, p.y, v); }

  int count_neighbors8(const Point& p) const {
    int n = 0;
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if ((dx || dy) && at(p.x + dx, p.y + dy)) ++n;
    return n;
  }

 private:
  int x0_ = 0, y0_ = 0, w_ = 0, h_ = 0;
  std::vector<uint8_t> bits_;
};

// 8-neighborhood in clockwise order as seen on screen (y down), starting East.
inline constexpr int kNbr8X[8] = {1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr int kNbr8Y[8] = {0, 1, 1, 1, 0, -1, -1, -1};

// 4-neighborhood: E, S, W, N.
inline constexpr int kNbr4X[4] = {1, 0, -1, 0};
inline constexpr int kNbr4Y[4] = {0, 1, 0, -1};

}  // namespace chromoseg
