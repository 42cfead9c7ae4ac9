#pragma once

#include <vector>

#include "surveil/frame.hpp"

namespace surveil::vision_ref {

// Naive serial reference for every vision kernel: straight double loops,
// BFS flood fill for components. Kept deliberately independent of the
// OpenMP implementations; tests require bit-exact agreement.

vision::Frame abs_diff(const vision::Frame& a, const vision::Frame& b);
vision::Frame conjunction(const vision::Frame& d1, const vision::Frame& d2);
vision::Frame to_grayscale(const vision::Frame& f);
vision::BinaryMask binarize(const vision::Frame& g, const vision::DetectionConfig& cfg);
vision::BinaryMask dilate(const vision::BinaryMask& m, int radius);
vision::BinaryMask erode(const vision::BinaryMask& m, int radius);
std::vector<vision::BoundingBox> extract_boxes(const vision::BinaryMask& m);
std::vector<vision::BoundingBox> detect(const vision::Frame& f_prev,
                                        const vision::Frame& f_cur,
                                        const vision::Frame& f_next,
                                        const vision::DetectionConfig& cfg);

}  // namespace surveil::vision_ref
