#include "tonguelab/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace tonguelab {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::uint8_t round_u8(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
  require(w >= 1 && h >= 1, ErrorCode::InvalidArgument, "image extent must be >= 1x1");
  data.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < data.size(); i += 3) {
    data[i] = fill.r;
    data[i + 1] = fill.g;
    data[i + 2] = fill.b;
  }
}

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
  require(w >= 1 && h >= 1, ErrorCode::InvalidArgument, "image extent must be >= 1x1");
  data.assign(static_cast<std::size_t>(w) * h, fill);
}

Mask::Mask(int w, int h, std::uint8_t fill) : width(w), height(h) {
  require(w >= 1 && h >= 1, ErrorCode::InvalidArgument, "mask extent must be >= 1x1");
  data.assign(static_cast<std::size_t>(w) * h, fill);
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::accumulate(data.begin(), data.end(), std::size_t{0}));
}

GrayImage to_grayscale(const Image& img) {
  GrayImage out(img.width, img.height);
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* p = img.data.data() + 3 * i;
    out.data[i] = round_u8(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
  }
  return out;
}

Image gray_to_rgb(const GrayImage& gray) {
  Image out(gray.width, gray.height);
  const std::size_t n = gray.data.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.data[3 * i] = out.data[3 * i + 1] = out.data[3 * i + 2] = gray.data[i];
  }
  return out;
}

Image rotate(const Image& img, double theta_deg, Point center, Rgb fill) {
  if (theta_deg == 0.0) return img;
  const double c = std::cos(theta_deg * kDegToRad);
  const double s = std::sin(theta_deg * kDegToRad);
  Image out(img.width, img.height, fill);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double rx = x - center.x;
      const double ry = y - center.y;
      const double sx = center.x + c * rx - s * ry;
      const double sy = center.y + s * rx + c * ry;
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0;
      const double fy = sy - y0;
      double acc[3] = {0.0, 0.0, 0.0};
      const double w[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
      const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
      const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
      for (int t = 0; t < 4; ++t) {
        if (w[t] == 0.0) continue;
        if (img.in_bounds(xs[t], ys[t])) {
          const std::uint8_t* p = img.pixel(xs[t], ys[t]);
          acc[0] += w[t] * p[0];
          acc[1] += w[t] * p[1];
          acc[2] += w[t] * p[2];
        } else {
          acc[0] += w[t] * fill.r;
          acc[1] += w[t] * fill.g;
          acc[2] += w[t] * fill.b;
        }
      }
      out.set(x, y, Rgb{round_u8(acc[0]), round_u8(acc[1]), round_u8(acc[2])});
    }
  }
  return out;
}

Mask rotate_mask(const Mask& mask, double theta_deg, Point center) {
  if (theta_deg == 0.0) return mask;
  const double c = std::cos(theta_deg * kDegToRad);
  const double s = std::sin(theta_deg * kDegToRad);
  Mask out(mask.width, mask.height, 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      const double rx = x - center.x;
      const double ry = y - center.y;
      const int sx = static_cast<int>(std::lround(center.x + c * rx - s * ry));
      const int sy = static_cast<int>(std::lround(center.y + s * rx + c * ry));
      if (sx >= 0 && sx < mask.width && sy >= 0 && sy < mask.height) {
        out.set(x, y, mask.at(sx, sy));
      }
    }
  }
  return out;
}

Image translate(const Image& img, int dx, int dy, Rgb fill) {
  if (dx == 0 && dy == 0) return img;
  Image out(img.width, img.height, fill);
  for (int y = 0; y < img.height; ++y) {
    const int sy = y - dy;
    if (sy < 0 || sy >= img.height) continue;
    for (int x = 0; x < img.width; ++x) {
      const int sx = x - dx;
      if (sx < 0 || sx >= img.width) continue;
      out.set(x, y, img.at(sx, sy));
    }
  }
  return out;
}

Mask translate_mask(const Mask& mask, int dx, int dy) {
  if (dx == 0 && dy == 0) return mask;
  Mask out(mask.width, mask.height, 0);
  for (int y = 0; y < mask.height; ++y) {
    const int sy = y - dy;
    if (sy < 0 || sy >= mask.height) continue;
    for (int x = 0; x < mask.width; ++x) {
      const int sx = x - dx;
      if (sx < 0 || sx >= mask.width) continue;
      out.set(x, y, mask.at(sx, sy));
    }
  }
  return out;
}

Mask erode(const Mask& mask, int k) {
  require(k >= 1, ErrorCode::InvalidArgument, "erosion kernel must be >= 1");
  if (k % 2 == 0) ++k;
  if (k == 1) return mask;
  const int r = k / 2;
  const int w = mask.width;
  const int h = mask.height;

  // Separable: a k x k ones kernel is a horizontal 1 x k pass followed by a
  // vertical k x 1 pass. Row/column prefix sums give O(1) window tests.
  Mask horiz(w, h, 0);
  std::vector<std::uint32_t> prefix(static_cast<std::size_t>(w) + 1);
  for (int y = 0; y < h; ++y) {
    prefix[0] = 0;
    for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + mask.at(x, y);
    for (int x = r; x < w - r; ++x) {
      if (prefix[x + r + 1] - prefix[x - r] == static_cast<std::uint32_t>(k)) horiz.set(x, y, 1);
    }
  }
  Mask out(w, h, 0);
  std::vector<std::uint32_t> colpre(static_cast<std::size_t>(h) + 1);
  for (int x = 0; x < w; ++x) {
    colpre[0] = 0;
    for (int y = 0; y < h; ++y) colpre[y + 1] = colpre[y] + horiz.at(x, y);
    for (int y = r; y < h - r; ++y) {
      if (colpre[y + r + 1] - colpre[y - r] == static_cast<std::uint32_t>(k)) out.set(x, y, 1);
    }
  }
  return out;
}

Rect bounding_box(const Mask& mask) {
  int x0 = mask.width, y0 = mask.height, x1 = -1, y1 = -1;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (mask.at(x, y)) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
    }
  }
  if (x1 < 0) throw Error(ErrorCode::EmptyMask, "mask has no set pixel");
  return Rect{x0, y0, x1 + 1, y1 + 1};
}

Rect expand_clamped(Rect r, int margin, int w, int h) {
  return Rect{std::max(0, r.x0 - margin), std::max(0, r.y0 - margin),
              std::min(w, r.x1 + margin), std::min(h, r.y1 + margin)};
}

Image crop(const Image& img, Rect r) {
  require(r.x0 >= 0 && r.y0 >= 0 && r.x1 <= img.width && r.y1 <= img.height && r.width() >= 1 &&
              r.height() >= 1,
          ErrorCode::InvalidArgument, "crop rect out of bounds");
  Image out(r.width(), r.height());
  for (int y = 0; y < out.height; ++y) {
    const std::uint8_t* src = img.pixel(r.x0, r.y0 + y);
    std::copy(src, src + 3 * out.width, out.pixel(0, y));
  }
  return out;
}

Mask crop(const Mask& mask, Rect r) {
  require(r.x0 >= 0 && r.y0 >= 0 && r.x1 <= mask.width && r.y1 <= mask.height && r.width() >= 1 &&
              r.height() >= 1,
          ErrorCode::InvalidArgument, "crop rect out of bounds");
  Mask out(r.width(), r.height());
  for (int y = 0; y < out.height; ++y) {
    const std::uint8_t* src = mask.data.data() + static_cast<std::size_t>(r.y0 + y) * mask.width + r.x0;
    std::copy(src, src + out.width, out.data.data() + static_cast<std::size_t>(y) * out.width);
  }
  return out;
}

Image crop_to_mask(const Image& img, const Mask& mask, int margin) {
  require(img.width == mask.width && img.height == mask.height, ErrorCode::ShapeMismatch,
          "image and mask extents differ");
  const Rect box = expand_clamped(bounding_box(mask), margin, img.width, img.height);
  return crop(img, box);
}

Image apply_mask(const Image& img, const Mask& mask) {
  require(img.width == mask.width && img.height == mask.height, ErrorCode::ShapeMismatch,
          "image and mask extents differ");
  Image out(img.width, img.height);
  const std::size_t n = mask.data.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (mask.data[i]) {
      out.data[3 * i] = img.data[3 * i];
      out.data[3 * i + 1] = img.data[3 * i + 1];
      out.data[3 * i + 2] = img.data[3 * i + 2];
    }
  }
  return out;
}

Image resize(const Image& img, int new_w, int new_h) {
  require(new_w >= 1 && new_h >= 1, ErrorCode::InvalidArgument, "resize extent must be >= 1x1");
  if (new_w == img.width && new_h == img.height) return img;
  Image out(new_w, new_h);
  const double sx = static_cast<double>(img.width) / new_w;
  const double sy = static_cast<double>(img.height) / new_h;
  for (int y = 0; y < new_h; ++y) {
    const double src_y = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height - 1.0);
    const int y0 = static_cast<int>(src_y);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fy = src_y - y0;
    for (int x = 0; x < new_w; ++x) {
      const double src_x = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width - 1.0);
      const int x0 = static_cast<int>(src_x);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double fx = src_x - x0;
      const std::uint8_t* p00 = img.pixel(x0, y0);
      const std::uint8_t* p10 = img.pixel(x1, y0);
      const std::uint8_t* p01 = img.pixel(x0, y1);
      const std::uint8_t* p11 = img.pixel(x1, y1);
      std::uint8_t* q = out.pixel(x, y);
      for (int ch = 0; ch < 3; ++ch) {
        const double top = p00[ch] * (1 - fx) + p10[ch] * fx;
        const double bot = p01[ch] * (1 - fx) + p11[ch] * fx;
        q[ch] = round_u8(top * (1 - fy) + bot * fy);
      }
    }
  }
  return out;
}

}  // namespace tonguelab
