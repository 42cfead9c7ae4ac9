#pragma once

#include <vector>

#include "surveil/frame.hpp"

namespace surveil::vision {

// Frame-difference foreground detection. The pixel kernels are
// OpenMP-parallel; a serial reference implementation with identical
// semantics lives in vision_ref.hpp for testing and benchmarking.

// |a - b| per sample. Frames must agree in dimensions and channels.
Frame abs_diff(const Frame& a, const Frame& b);

// Bitwise AND per 8-bit sample.
Frame conjunction(const Frame& d1, const Frame& d2);

// 3-channel input: round(0.299 R + 0.587 G + 0.114 B); 1-channel passes through.
Frame to_grayscale(const Frame& f);

// sample > threshold -> maxval, else 0 (strict inequality).
BinaryMask binarize(const Frame& g, const DetectionConfig& cfg);

// Max / min over the square neighborhood of side 2*radius+1; neighborhoods
// are truncated at image borders.
BinaryMask dilate(const BinaryMask& m, int radius);
BinaryMask erode(const BinaryMask& m, int radius);

// Tight boxes of 8-connected components of set pixels, ordered by (y, x)
// of the top-left corner.
std::vector<BoundingBox> extract_boxes(const BinaryMask& m);

// Full pipeline over three consecutive sampled frames, then the size and
// aspect filters from cfg.
std::vector<BoundingBox> detect(const Frame& f_prev, const Frame& f_cur,
                                const Frame& f_next, const DetectionConfig& cfg);

// Filter shared by detect() and the reference pipeline: keep boxes with
// area >= min_box_area_fraction * frame area and w/h within bounds.
std::vector<BoundingBox> filter_boxes(const std::vector<BoundingBox>& boxes,
                                      int frame_w, int frame_h,
                                      const DetectionConfig& cfg);

}  // namespace surveil::vision
