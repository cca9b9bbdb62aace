#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "panofield/image.hpp"

namespace panofield {

// 8-bit RGB PNG. Values are mapped to [0,1] floats on read and rounded on
// write; re-reading a written file reproduces the rounded values exactly.
ImageRgb read_png_rgb8(const std::string& path);
void write_png_rgb8(const std::string& path, const ImageRgb& img);

// 16-bit grayscale PNG holding depth in millimeters (0 = invalid).
DepthPanorama read_png_depth16(const std::string& path);
void write_png_depth16(const std::string& path, const DepthPanorama& depth);

// 8-bit grayscale PNG for opacity/debug rasters, values in [0,1].
void write_png_gray8(const std::string& path, const std::vector<float>& values, int width,
                     int height);

}  // namespace panofield
