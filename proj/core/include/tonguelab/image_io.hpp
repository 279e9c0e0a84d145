#pragma once

#include <string>

#include "tonguelab/image.hpp"

namespace tonguelab {

/// Reads a PNG or JPEG file into 8-bit RGB. Gray, palette, 16-bit and
/// alpha-carrying PNGs are converted; alpha is dropped.
Image read_image(const std::string& path);

/// Reads a mask from a single-channel (or RGB) PNG; any nonzero sample
/// loads as 1.
Mask read_mask(const std::string& path);

/// Writes 8-bit RGB PNG.
void write_png(const std::string& path, const Image& img);

/// Writes a mask as a single-channel PNG with samples 0 / 255.
void write_png(const std::string& path, const Mask& mask);

}  // namespace tonguelab
