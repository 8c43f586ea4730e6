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

#include <stdexcept>
#include <vector>

#include "chromoseg/geom.hpp"
#include "chromoseg/raster.hpp"

namespace chromoseg {

/// Closed clockwise walk of a region's outer contour. Consecutive entries
/// (cyclically) are 8-neighbors; revisits are allowed where 1-px-wide
/// protrusions force the walk back over the same pixel.
struct Boundary {
  std::vector<Point> points;
  int n() const { return static_cast<int>(points.size()); }

  const Point& at(int i) const {  // cyclic indexing
    const int m = n();
    i %= m;
    if (i < 0) i += m;
    return points[static_cast<size_t>(i)];
  }
};

/// Signed polygon area x2 under the image convention (y down): clockwise
/// walks as seen on screen yield values <= 0.
inline long long signed_area2(const std::vector<Point>& poly) {
  long long s = 0;
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % m];
    s += static_cast<long long>(b.x - a.x) * (b.y + a.y);
  }
  return s;
}

namespace boundary_detail {

struct TraceState {
  Point pos;
  int back_dir;  // index into kNbr8 of the background neighbor we came past
  friend bool operator==(const TraceState&, const TraceState&) = default;
};

// One Moore step: scan the 8-neighborhood clockwise starting just after the
// backtrack direction; first foreground pixel is the next position, and the
// direction scanned immediately before it becomes the new backtrack.
inline bool moore_step(const PixelGrid& grid, const TraceState& s, TraceState& out) {
  int d = s.back_dir;
  for (int k = 1; k <= 8; ++k) {
    const int nd = (d + k) % 8;
    const Point q{s.pos.x + kNbr8X[nd], s.pos.y + kNbr8Y[nd]};
    if (grid.at(q)) {
      // Backtrack of q = the last background cell scanned, expressed as a
      // direction from q.
      const int pd = (d + k - 1) % 8;
      const Point back{s.pos.x + kNbr8X[pd], s.pos.y + kNbr8Y[pd]};
      int bd = -1;
      for (int j = 0; j < 8; ++j) {
        if (q.x + kNbr8X[j] == back.x && q.y + kNbr8Y[j] == back.y) {
          bd = j;
          break;
        }
      }
      out = TraceState{q, bd};
      return true;
    }
  }
  return false;  // isolated pixel
}

}  // namespace boundary_detail

/// Moore-neighbor contour tracing, clockwise on screen, starting from the
/// topmost-then-leftmost pixel. Terminates when the walk is about to repeat
/// its first move out of the start pixel (Jacob's stopping criterion); inner
/// contours are ignored. A single pixel yields a walk of length 1.
inline Boundary trace_boundary(const Region& region) {
  if (region.pixels.empty()) throw std::invalid_argument("trace_boundary: empty region");
  const PixelGrid grid = PixelGrid::from_pixels(region.pixels, 2);

  // pixels are raster-ordered, so front() is topmost-then-leftmost; its N and
  // W neighbors are background.
  const Point start = region.pixels.front();

  using boundary_detail::TraceState;
  using boundary_detail::moore_step;

  const TraceState init{start, 4};  // backtrack = West
  Boundary b;
  b.points.push_back(start);

  TraceState first;
  if (!moore_step(grid, init, first)) return b;  // single pixel

  TraceState cur = first;
  const size_t guard = 4 * region.pixels.size() + 16;
  while (b.points.size() < guard) {
    if (cur.pos == start) {
      TraceState next;
      if (moore_step(grid, cur, next) && next == first) break;  // cycle closed
    }
    b.points.push_back(cur.pos);
    TraceState next;
    moore_step(grid, cur, next);  // always succeeds: cur has a fg neighbor
    cur = next;
  }
  return b;
}

}  // namespace chromoseg
