#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "bimonn/binary_set.hpp"

namespace bimonn {

/// Dense row-major 2D array of doubles; carries activations, weights and
/// gradients.
class RealGrid {
 public:
  RealGrid() = default;
  RealGrid(int width, int height, double fill = 0.0)
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw std::invalid_argument("RealGrid: dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  static RealGrid from_binary(const BinarySet& set) {
    RealGrid g(set.width(), set.height());
    for (int y = 0; y < set.height(); ++y) {
      double* r = g.row(y);
      for (int x = 0; x < set.width(); ++x) r[x] = set.get(x, y) ? 1.0 : 0.0;
    }
    return g;
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool same_shape(const RealGrid& o) const {
    return width_ == o.width_ && height_ == o.height_;
  }

  double operator()(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double& operator()(int x, int y) {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  const double* row(int y) const {
    return data_.data() + static_cast<std::size_t>(y) * width_;
  }
  double* row(int y) {
    return data_.data() + static_cast<std::size_t>(y) * width_;
  }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  void fill(double v) { data_.assign(data_.size(), v); }

  /// Pixels strictly greater than `threshold`.
  BinarySet threshold_above(double threshold) const {
    BinarySet out(width_, height_);
    for (int y = 0; y < height_; ++y) {
      const double* r = row(y);
      for (int x = 0; x < width_; ++x) {
        if (r[x] > threshold) out.set(x, y, true);
      }
    }
    return out;
  }

  bool operator==(const RealGrid& o) const {
    return width_ == o.width_ && height_ == o.height_ && data_ == o.data_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

}  // namespace bimonn
