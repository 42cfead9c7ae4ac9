#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surveil::vision {

struct Frame {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 or 3
  std::vector<std::uint8_t> data;  // row-major, interleaved channels
  std::string camera_id;
  double capture_time = 0.0;  // simulation clock, seconds

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t sample_count() const { return pixel_count() * channels; }

  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

inline Frame make_frame(int w, int h, int ch, std::uint8_t fill = 0,
                        std::string camera_id = {}, double capture_time = 0.0) {
  Frame f;
  f.width = w;
  f.height = h;
  f.channels = ch;
  f.data.assign(static_cast<std::size_t>(w) * h * ch, fill);
  f.camera_id = std::move(camera_id);
  f.capture_time = capture_time;
  return f;
}

inline void validate_frame(const Frame& f) {
  if (f.width <= 0 || f.height <= 0) {
    throw std::invalid_argument("frame: non-positive dimensions");
  }
  if (f.channels != 1 && f.channels != 3) {
    throw std::invalid_argument("frame: channels must be 1 or 3");
  }
  if (f.data.size() != f.sample_count()) {
    throw std::invalid_argument("frame: data length != width*height*channels");
  }
}

struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // every sample in {0, maxval}

  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
};

inline BinaryMask make_mask(int w, int h, std::uint8_t fill = 0) {
  BinaryMask m;
  m.width = w;
  m.height = h;
  m.data.assign(static_cast<std::size_t>(w) * h, fill);
  return m;
}

struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  long area() const { return static_cast<long>(w) * h; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct DetectionConfig {
  int threshold = 25;     // binarization cut, strict >; valid range [1, 254]
  int maxval = 255;       // set value for 8-bit masks
  int dilation_radius = 2;
  int erosion_radius = 1;
  double min_box_area_fraction = 0.001;  // of frame area
  double aspect_low = 0.25;   // w/h bounds, inclusive
  double aspect_high = 4.0;   // aspect_low == 1 / aspect_high
  double sample_interval_s = 1.0;
};

inline void validate_config(const DetectionConfig& cfg) {
  if (cfg.threshold < 1 || cfg.threshold > 254) {
    throw std::invalid_argument("detection: threshold outside [1,254]");
  }
  if (cfg.maxval != 255) {
    throw std::invalid_argument("detection: maxval must be 255 for 8-bit");
  }
  if (cfg.dilation_radius < 0 || cfg.erosion_radius < 0) {
    throw std::invalid_argument("detection: negative morphology radius");
  }
  if (!(cfg.min_box_area_fraction > 0.0 && cfg.min_box_area_fraction < 1.0)) {
    throw std::invalid_argument("detection: min_box_area_fraction outside (0,1)");
  }
  if (cfg.aspect_low <= 0.0 || cfg.aspect_high <= 0.0 ||
      std::abs(cfg.aspect_low * cfg.aspect_high - 1.0) > 1e-9) {
    throw std::invalid_argument("detection: aspect bounds must satisfy low == 1/high");
  }
  if (!(cfg.sample_interval_s > 0.0)) {
    throw std::invalid_argument("detection: sample_interval_s must be positive");
  }
}

}  // namespace surveil::vision
