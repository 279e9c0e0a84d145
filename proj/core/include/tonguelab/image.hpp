#pragma once

#include <cstdint>
#include <vector>

#include "tonguelab/error.hpp"

namespace tonguelab {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

/// A 2-D point in pixel coordinates. x grows rightward, y grows downward.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// 8-bit RGB raster, row-major, no padding. data.size() == width*height*3.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, Rgb fill = Rgb{});

  std::uint8_t* pixel(int x, int y) { return data.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
  const std::uint8_t* pixel(int x, int y) const {
    return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }
  Rgb at(int x, int y) const {
    const std::uint8_t* p = pixel(x, y);
    return Rgb{p[0], p[1], p[2]};
  }
  void set(int x, int y, Rgb c) {
    std::uint8_t* p = pixel(x, y);
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  bool operator==(const Image&) const = default;
};

/// Single-channel 8-bit raster.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  void set(int x, int y, std::uint8_t v) { data[static_cast<std::size_t>(y) * width + x] = v; }

  bool operator==(const GrayImage&) const = default;
};

/// Binary raster; every sample is 0 or 1.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Mask() = default;
  Mask(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  void set(int x, int y, std::uint8_t v) { data[static_cast<std::size_t>(y) * width + x] = v; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool operator==(const Mask&) const = default;
};

/// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct Rect {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }

  bool operator==(const Rect&) const = default;
};

// --- Geometric and morphological operators ---------------------------------
//
// All operators are pure: inputs are untouched, outputs freshly allocated.
// Interpolation and accumulation run in double precision; results are
// rounded to 8 bits exactly once, at output.

/// Rec.601 luma: Y = round(0.299 R + 0.587 G + 0.114 B), clamped to [0,255].
GrayImage to_grayscale(const Image& img);

/// Rotates image content by `theta_deg` about `center`: output pixel p is
/// sampled from the input at center + R(theta) (p - center), bilinearly,
/// with `fill` outside the frame. A feature axis at atan2-angle phi ends
/// up at phi - theta. Output has the same extent as the input.
Image rotate(const Image& img, double theta_deg, Point center, Rgb fill = Rgb{});

/// Mask variant of rotate; nearest-neighbor resampling, outside = 0.
Mask rotate_mask(const Mask& mask, double theta_deg, Point center);

/// Shifts content by (dx, dy): output (x, y) = input (x - dx, y - dy),
/// `fill` outside.
Image translate(const Image& img, int dx, int dy, Rgb fill = Rgb{});
Mask translate_mask(const Mask& mask, int dx, int dy);

/// Binary erosion by a k x k all-ones kernel. Even k is rounded up to the
/// next odd value so the kernel has a center pixel. Outside the frame
/// counts as 0, so any window touching the border erodes away.
Mask erode(const Mask& mask, int k);

/// Tight bounding box of set pixels. Throws EmptyMask when none are set.
Rect bounding_box(const Mask& mask);

/// Grows `r` by `margin` on every side, clamped to [0,w) x [0,h).
Rect expand_clamped(Rect r, int margin, int w, int h);

Image crop(const Image& img, Rect r);
Mask crop(const Mask& mask, Rect r);

/// Sub-image of the mask's bounding box expanded by `margin`, clamped to
/// the image bounds. Throws EmptyMask.
Image crop_to_mask(const Image& img, const Mask& mask, int margin);

/// Per-pixel multiply by the binary mask; background becomes exactly 0.
Image apply_mask(const Image& img, const Mask& mask);

/// Bilinear resize to new_w x new_h.
Image resize(const Image& img, int new_w, int new_h);

/// Gray -> RGB by channel replication.
Image gray_to_rgb(const GrayImage& gray);

}  // namespace tonguelab
