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

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromoseg/geom.hpp"

namespace chromoseg {

/// Row-major foreground/background grid. Foreground = chromosome material.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // size width*height, values 0/1

  BinaryImage() = default;
  BinaryImage(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h, 0) {}

  bool at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { pixels[static_cast<size_t>(y) * width + x] = v ? 1 : 0; }
  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;
};

/// Row-major 8-bit grayscale grid.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h, 0) {}

  uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Row-major component labels; 0 is background, positive ids are components.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<uint32_t> labels;

  LabelMap() = default;
  LabelMap(int w, int h) : width(w), height(h), labels(static_cast<size_t>(w) * h, 0) {}

  uint32_t at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
  void set(int x, int y, uint32_t v) { labels[static_cast<size_t>(y) * width + x] = v; }

  uint32_t max_label() const {
    uint32_t m = 0;
    for (uint32_t v : labels) m = std::max(m, v);
    return m;
  }
  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

/// One connected component: pixel set in raster order plus its tight bbox.
struct Region {
  uint32_t label = 0;
  std::vector<Point> pixels;
  BBox bbox;

  size_t size() const { return pixels.size(); }
};

inline Region make_region(uint32_t label, std::vector<Point> pixels) {
  Region r;
  r.label = label;
  r.bbox = bbox_of(pixels);
  r.pixels = std::move(pixels);
  return r;
}

enum class Polarity { kAuto, kDark, kLight };

/// Otsu-optimal threshold level: the cut t maximizing between-class variance
/// of {0..t} vs {t+1..255}. Ties resolve to the lowest level.
/// Throws std::domain_error on a single-intensity histogram.
inline int otsu_level(const GrayImage& img) {
  if (img.pixels.empty()) throw std::invalid_argument("otsu: empty image");
  std::array<int64_t, 256> hist{};
  for (uint8_t v : img.pixels) ++hist[v];

  const int64_t total = static_cast<int64_t>(img.pixels.size());
  int64_t weighted_total = 0;
  for (int v = 0; v < 256; ++v) weighted_total += static_cast<int64_t>(v) * hist[v];

  int best_t = -1;
  double best_var = -1.0;
  int64_t w0 = 0, sum0 = 0;
  for (int t = 0; t < 255; ++t) {
    w0 += hist[t];
    sum0 += static_cast<int64_t>(t) * hist[t];
    const int64_t w1 = total - w0;
    if (w0 == 0 || w1 == 0) continue;
    const double mu0 = static_cast<double>(sum0) / w0;
    const double mu1 = static_cast<double>(weighted_total - sum0) / w1;
    const double var = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
    if (var > best_var) {
      best_var = var;
      best_t = t;
    }
  }
  if (best_t < 0) throw std::domain_error("otsu: degenerate histogram");
  return best_t;
}

/// Global Otsu threshold. Foreground polarity: kDark takes intensities <= t,
/// kLight takes > t, kAuto takes the minority class (chromosomes are sparse),
/// preferring the dark side on an exact tie.
inline BinaryImage otsu_threshold(const GrayImage& img, Polarity polarity = Polarity::kAuto) {
  const int t = otsu_level(img);
  int64_t dark = 0;
  for (uint8_t v : img.pixels)
    if (v <= t) ++dark;
  const int64_t light = static_cast<int64_t>(img.pixels.size()) - dark;

  bool fg_dark = true;
  switch (polarity) {
    case Polarity::kDark: fg_dark = true; break;
    case Polarity::kLight: fg_dark = false; break;
    case Polarity::kAuto: fg_dark = dark <= light; break;
  }

  BinaryImage out(img.width, img.height);
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    const bool d = img.pixels[i] <= t;
    out.pixels[i] = (d == fg_dark) ? 1 : 0;
  }
  return out;
}

namespace detail {

class UnionFind {
 public:
  uint32_t make() {
    parent_.push_back(static_cast<uint32_t>(parent_.size()));
    return parent_.back();
  }
  uint32_t find(uint32_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<uint32_t> parent_;
};

}  // namespace detail

/// Two-pass connected-component labeling. Labels are 1..K assigned in
/// first-encounter raster order; background stays 0.
inline LabelMap label_components(const BinaryImage& img, int connectivity = 8) {
  if (connectivity != 4 && connectivity != 8)
    throw std::invalid_argument("label_components: connectivity must be 4 or 8");

  LabelMap provisional(img.width, img.height);
  detail::UnionFind uf;
  uf.make();  // slot 0 = background

  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (!img.at(x, y)) continue;
      uint32_t best = 0;
      auto consider = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= img.width || ny >= img.height) return;
        const uint32_t l = provisional.at(nx, ny);
        if (l == 0) return;
        if (best == 0)
          best = l;
        else
          uf.unite(best, l);
      };
      consider(x - 1, y);
      consider(x, y - 1);
      if (connectivity == 8) {
        consider(x - 1, y - 1);
        consider(x + 1, y - 1);
      }
      if (best == 0) best = uf.make();
      provisional.set(x, y, best);
    }
  }

  // Renumber roots in first-encounter raster order.
  LabelMap out(img.width, img.height);
  std::vector<uint32_t> remap(1, 0);  // grows lazily; index by root
  uint32_t next = 1;
  std::vector<uint32_t> root_to_label;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const uint32_t l = provisional.at(x, y);
      if (l == 0) continue;
      const uint32_t root = uf.find(l);
      if (root >= root_to_label.size()) root_to_label.resize(root + 1, 0);
      if (root_to_label[root] == 0) root_to_label[root] = next++;
      out.set(x, y, root_to_label[root]);
    }
  }
  return out;
}

/// One Region per positive label, sorted by label; pixel lists in raster order.
inline std::vector<Region> extract_regions(const LabelMap& map) {
  const uint32_t k = map.max_label();
  std::vector<Region> regions(k);
  for (uint32_t i = 0; i < k; ++i) regions[i].label = i + 1;
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      const uint32_t l = map.at(x, y);
      if (l == 0) continue;
      Region& r = regions[l - 1];
      r.pixels.push_back({x, y});
      r.bbox.expand({x, y});
    }
  }
  return regions;
}

}  // namespace chromoseg
