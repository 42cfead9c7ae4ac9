#include "surveil/vision_ref.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

namespace surveil::vision_ref {

using vision::BinaryMask;
using vision::BoundingBox;
using vision::DetectionConfig;
using vision::Frame;

Frame abs_diff(const Frame& a, const Frame& b) {
  Frame out = a;
  for (int y = 0; y < a.height; ++y) {
    for (int x = 0; x < a.width; ++x) {
      for (int c = 0; c < a.channels; ++c) {
        int d = int(a.at(x, y, c)) - int(b.at(x, y, c));
        out.at(x, y, c) = static_cast<std::uint8_t>(d < 0 ? -d : d);
      }
    }
  }
  return out;
}

Frame conjunction(const Frame& d1, const Frame& d2) {
  Frame out = d1;
  for (int y = 0; y < d1.height; ++y) {
    for (int x = 0; x < d1.width; ++x) {
      for (int c = 0; c < d1.channels; ++c) {
        out.at(x, y, c) = static_cast<std::uint8_t>(d1.at(x, y, c) & d2.at(x, y, c));
      }
    }
  }
  return out;
}

Frame to_grayscale(const Frame& f) {
  if (f.channels == 1) return f;
  Frame out = vision::make_frame(f.width, f.height, 1, 0, f.camera_id, f.capture_time);
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      double v = 0.299 * f.at(x, y, 0) + 0.587 * f.at(x, y, 1) + 0.114 * f.at(x, y, 2);
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return out;
}

BinaryMask binarize(const Frame& g, const DetectionConfig& cfg) {
  BinaryMask out = vision::make_mask(g.width, g.height);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      out.at(x, y) = g.at(x, y) > cfg.threshold ? static_cast<std::uint8_t>(cfg.maxval) : 0;
    }
  }
  return out;
}

namespace {

BinaryMask neighborhood_extreme(const BinaryMask& m, int radius, bool maximum) {
  BinaryMask out = vision::make_mask(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      std::uint8_t v = maximum ? 0 : 255;
      for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
          int xx = x + dx, yy = y + dy;
          if (xx < 0 || xx >= m.width || yy < 0 || yy >= m.height) continue;
          std::uint8_t u = m.at(xx, yy);
          v = maximum ? std::max(v, u) : std::min(v, u);
        }
      }
      out.at(x, y) = v;
    }
  }
  return out;
}

}  // namespace

BinaryMask dilate(const BinaryMask& m, int radius) {
  return neighborhood_extreme(m, radius, true);
}

BinaryMask erode(const BinaryMask& m, int radius) {
  return neighborhood_extreme(m, radius, false);
}

std::vector<BoundingBox> extract_boxes(const BinaryMask& m) {
  const int w = m.width, h = m.height;
  std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<BoundingBox> boxes;

  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      std::size_t sidx = static_cast<std::size_t>(sy) * w + sx;
      if (m.data[sidx] == 0 || seen[sidx]) continue;
      int min_x = sx, max_x = sx, min_y = sy, max_y = sy;
      std::deque<std::pair<int, int>> queue = {{sx, sy}};
      seen[sidx] = 1;
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int xx = x + dx, yy = y + dy;
            if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;
            std::size_t idx = static_cast<std::size_t>(yy) * w + xx;
            if (m.data[idx] == 0 || seen[idx]) continue;
            seen[idx] = 1;
            queue.emplace_back(xx, yy);
          }
        }
      }
      boxes.push_back({min_x, min_y, max_x - min_x + 1, max_y - min_y + 1});
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const BoundingBox& a, const BoundingBox& b) {
    return std::tie(a.y, a.x, a.w, a.h) < std::tie(b.y, b.x, b.w, b.h);
  });
  return boxes;
}

std::vector<BoundingBox> detect(const Frame& f_prev, const Frame& f_cur,
                                const Frame& f_next, const DetectionConfig& cfg) {
  Frame d1 = abs_diff(f_cur, f_prev);
  Frame d2 = abs_diff(f_next, f_cur);
  Frame da = conjunction(d1, d2);
  Frame dg = to_grayscale(da);
  BinaryMask db = binarize(dg, cfg);
  BinaryMask dd = dilate(db, cfg.dilation_radius);
  BinaryMask de = erode(dd, cfg.erosion_radius);

  std::vector<BoundingBox> out;
  const double min_area = cfg.min_box_area_fraction *
                          static_cast<double>(f_cur.width) * static_cast<double>(f_cur.height);
  for (const BoundingBox& b : extract_boxes(de)) {
    double aspect = static_cast<double>(b.w) / static_cast<double>(b.h);
    if (static_cast<double>(b.area()) < min_area) continue;
    if (aspect < cfg.aspect_low || aspect > cfg.aspect_high) continue;
    out.push_back(b);
  }
  return out;
}

}  // namespace surveil::vision_ref
