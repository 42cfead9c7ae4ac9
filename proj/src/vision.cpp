#include "surveil/vision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

namespace surveil::vision {

namespace {

void require_same_shape(const Frame& a, const Frame& b) {
  validate_frame(a);
  validate_frame(b);
  if (a.width != b.width || a.height != b.height || a.channels != b.channels) {
    throw std::invalid_argument("vision: frame shape mismatch");
  }
}

}  // namespace

Frame abs_diff(const Frame& a, const Frame& b) {
  require_same_shape(a, b);
  Frame out = a;
  const std::uint8_t* pa = a.data.data();
  const std::uint8_t* pb = b.data.data();
  std::uint8_t* po = out.data.data();
  const long n = static_cast<long>(a.sample_count());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    po[i] = static_cast<std::uint8_t>(std::abs(int(pa[i]) - int(pb[i])));
  }
  return out;
}

Frame conjunction(const Frame& d1, const Frame& d2) {
  require_same_shape(d1, d2);
  Frame out = d1;
  const std::uint8_t* p1 = d1.data.data();
  const std::uint8_t* p2 = d2.data.data();
  std::uint8_t* po = out.data.data();
  const long n = static_cast<long>(d1.sample_count());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    po[i] = static_cast<std::uint8_t>(p1[i] & p2[i]);
  }
  return out;
}

Frame to_grayscale(const Frame& f) {
  validate_frame(f);
  if (f.channels == 1) return f;
  Frame out;
  out.width = f.width;
  out.height = f.height;
  out.channels = 1;
  out.camera_id = f.camera_id;
  out.capture_time = f.capture_time;
  out.data.resize(f.pixel_count());
  const std::uint8_t* pf = f.data.data();
  std::uint8_t* po = out.data.data();
  const long n = static_cast<long>(f.pixel_count());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const std::uint8_t* px = pf + 3 * i;
    double y = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    po[i] = static_cast<std::uint8_t>(std::lround(y));
  }
  return out;
}

BinaryMask binarize(const Frame& g, const DetectionConfig& cfg) {
  validate_frame(g);
  validate_config(cfg);
  if (g.channels != 1) {
    throw std::invalid_argument("binarize: expects 1-channel frame");
  }
  BinaryMask out = make_mask(g.width, g.height);
  const std::uint8_t* pg = g.data.data();
  std::uint8_t* po = out.data.data();
  const std::uint8_t maxval = static_cast<std::uint8_t>(cfg.maxval);
  const int thr = cfg.threshold;
  const long n = static_cast<long>(g.pixel_count());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    po[i] = pg[i] > thr ? maxval : 0;
  }
  return out;
}

namespace {

enum class Morph { Max, Min };

// Square structuring elements are separable: a horizontal running extreme
// followed by a vertical one, each over 2r+1 samples truncated at borders.
BinaryMask morph(const BinaryMask& m, int radius, Morph op) {
  if (radius < 0) throw std::invalid_argument("morphology: negative radius");
  if (radius == 0) return m;
  const int w = m.width, h = m.height;
  BinaryMask tmp = make_mask(w, h);
  BinaryMask out = make_mask(w, h);

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = m.data.data() + static_cast<std::size_t>(y) * w;
    std::uint8_t* trow = tmp.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      int lo = std::max(0, x - radius);
      int hi = std::min(w - 1, x + radius);
      std::uint8_t v = row[lo];
      for (int i = lo + 1; i <= hi; ++i) {
        v = op == Morph::Max ? std::max(v, row[i]) : std::min(v, row[i]);
      }
      trow[x] = v;
    }
  }

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    int lo = std::max(0, y - radius);
    int hi = std::min(h - 1, y + radius);
    std::uint8_t* orow = out.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      std::uint8_t v = tmp.at(x, lo);
      for (int i = lo + 1; i <= hi; ++i) {
        std::uint8_t u = tmp.at(x, i);
        v = op == Morph::Max ? std::max(v, u) : std::min(v, u);
      }
      orow[x] = v;
    }
  }
  return out;
}

}  // namespace

BinaryMask dilate(const BinaryMask& m, int radius) {
  return morph(m, radius, Morph::Max);
}

BinaryMask erode(const BinaryMask& m, int radius) {
  return morph(m, radius, Morph::Min);
}

std::vector<BoundingBox> extract_boxes(const BinaryMask& m) {
  const int w = m.width, h = m.height;
  const std::size_t n = static_cast<std::size_t>(w) * h;
  if (n == 0) return {};

  // Two-pass labeling with union-find, 8-connectivity.
  std::vector<int> label(n, -1);
  std::vector<int> parent;
  parent.reserve(256);

  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (m.data[idx] == 0) continue;
      int got = -1;
      // Scan the four already-visited 8-neighbours.
      const int nx[4] = {x - 1, x - 1, x, x + 1};
      const int ny[4] = {y, y - 1, y - 1, y - 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < 0 || nx[k] >= w || ny[k] < 0) continue;
        int lb = label[static_cast<std::size_t>(ny[k]) * w + nx[k]];
        if (lb < 0) continue;
        if (got < 0) {
          got = lb;
        } else {
          unite(got, lb);
        }
      }
      if (got < 0) {
        got = static_cast<int>(parent.size());
        parent.push_back(got);
      }
      label[idx] = got;
    }
  }

  std::vector<BoundingBox> by_root(parent.size(), BoundingBox{0, 0, -1, -1});
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int lb = label[static_cast<std::size_t>(y) * w + x];
      if (lb < 0) continue;
      int r = find(lb);
      BoundingBox& bb = by_root[r];
      if (bb.w < 0) {
        bb = {x, y, x, y};  // store extents, converted below
      } else {
        bb.x = std::min(bb.x, x);
        bb.y = std::min(bb.y, y);
        bb.w = std::max(bb.w, x);
        bb.h = std::max(bb.h, y);
      }
    }
  }

  std::vector<BoundingBox> boxes;
  for (const BoundingBox& e : by_root) {
    if (e.w < 0) continue;
    boxes.push_back({e.x, e.y, e.w - e.x + 1, e.h - e.y + 1});
  }
  std::sort(boxes.begin(), boxes.end(), [](const BoundingBox& a, const BoundingBox& b) {
    return std::tie(a.y, a.x, a.w, a.h) < std::tie(b.y, b.x, b.w, b.h);
  });
  return boxes;
}

std::vector<BoundingBox> filter_boxes(const std::vector<BoundingBox>& boxes,
                                      int frame_w, int frame_h,
                                      const DetectionConfig& cfg) {
  const double min_area = cfg.min_box_area_fraction *
                          static_cast<double>(frame_w) * static_cast<double>(frame_h);
  std::vector<BoundingBox> out;
  for (const BoundingBox& b : boxes) {
    double aspect = static_cast<double>(b.w) / static_cast<double>(b.h);
    if (static_cast<double>(b.area()) < min_area) continue;
    if (aspect < cfg.aspect_low || aspect > cfg.aspect_high) continue;
    out.push_back(b);
  }
  return out;
}

std::vector<BoundingBox> detect(const Frame& f_prev, const Frame& f_cur,
                                const Frame& f_next, const DetectionConfig& cfg) {
  require_same_shape(f_prev, f_cur);
  require_same_shape(f_cur, f_next);
  if (f_prev.camera_id != f_cur.camera_id || f_cur.camera_id != f_next.camera_id) {
    throw std::invalid_argument("detect: frames from different cameras");
  }
  validate_config(cfg);

  Frame d1 = abs_diff(f_cur, f_prev);
  Frame d2 = abs_diff(f_next, f_cur);
  Frame da = conjunction(d1, d2);
  Frame dg = to_grayscale(da);
  BinaryMask db = binarize(dg, cfg);
  BinaryMask dd = dilate(db, cfg.dilation_radius);
  BinaryMask de = erode(dd, cfg.erosion_radius);
  return filter_boxes(extract_boxes(de), f_cur.width, f_cur.height, cfg);
}

}  // namespace surveil::vision
