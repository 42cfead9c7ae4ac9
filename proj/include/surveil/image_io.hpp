#pragma once

#include <string>

#include "surveil/frame.hpp"

namespace surveil::vision {

// Binary PGM (P5, 1 channel) and PPM (P6, 3 channels), maxval 255.
Frame read_pnm(const std::string& path);
void write_pnm(const std::string& path, const Frame& f);

}  // namespace surveil::vision
