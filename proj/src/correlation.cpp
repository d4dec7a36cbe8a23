#include "bimonn/correlation.hpp"

#include <algorithm>
#include <stdexcept>

namespace bimonn {

namespace {

void check_kernel(const RealGrid& kernel) {
  if (kernel.width() != kernel.height() || kernel.width() % 2 == 0) {
    throw std::invalid_argument("correlate: kernel must be square, odd side");
  }
}

}  // namespace

RealGrid correlate(const RealGrid& input, const RealGrid& kernel) {
  check_kernel(kernel);
  const int w = input.width();
  const int h = input.height();
  const int side = kernel.width();
  const int n = side / 2;
  RealGrid out(w, h);
  // Row-wise axpy per kernel tap keeps the inner loop contiguous.
  for (int y = 0; y < h; ++y) {
    double* dst = out.row(y);
    for (int r = 0; r < side; ++r) {
      const int dy = r - n;
      const int sy = y - dy;
      if (sy < 0 || sy >= h) continue;
      const double* src = input.row(sy);
      const double* wrow = kernel.row(r);
      for (int c = 0; c < side; ++c) {
        const double wv = wrow[c];
        const int dx = c - n;
        const int x_lo = std::max(0, dx);
        const int x_hi = std::min(w, w + dx);
        const double* s = src + (x_lo - dx);
        for (int x = x_lo; x < x_hi; ++x) {
          dst[x] += wv * s[x - x_lo];
        }
      }
    }
  }
  return out;
}

RealGrid correlate_kernel_gradient(const RealGrid& input,
                                   const RealGrid& d_output, int side) {
  if (!input.same_shape(d_output)) {
    throw std::invalid_argument("correlate_kernel_gradient: shape mismatch");
  }
  if (side < 1 || side % 2 == 0) {
    throw std::invalid_argument("correlate_kernel_gradient: bad kernel side");
  }
  const int w = input.width();
  const int h = input.height();
  const int n = side / 2;
  RealGrid grad(side, side);
  for (int r = 0; r < side; ++r) {
    const int dy = r - n;
    double* grow = grad.row(r);
    for (int c = 0; c < side; ++c) {
      const int dx = c - n;
      const int x_lo = std::max(0, dx);
      const int x_hi = std::min(w, w + dx);
      double acc = 0.0;
      for (int y = std::max(0, dy); y < std::min(h, h + dy); ++y) {
        const double* g = d_output.row(y) + x_lo;
        const double* s = input.row(y - dy) + (x_lo - dx);
        const int len = x_hi - x_lo;
        for (int x = 0; x < len; ++x) acc += g[x] * s[x];
      }
      grow[c] = acc;
    }
  }
  return grad;
}

RealGrid reflect_kernel(const RealGrid& kernel) {
  check_kernel(kernel);
  const int s = kernel.width();
  RealGrid out(s, s);
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      out(s - 1 - x, s - 1 - y) = kernel(x, y);
    }
  }
  return out;
}

}  // namespace bimonn
