#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace bimonn {

/// 2D point set on a bounded grid, packed 64 pixels per word, row-major.
/// Bit b of row word w holds pixel x = 64*w + b; unused tail bits of the
/// last word in each row are kept at zero by every operation.
class BinarySet {
 public:
  BinarySet() = default;
  BinarySet(int width, int height);

  static BinarySet full(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int words_per_row() const { return wpl_; }
  bool same_shape(const BinarySet& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool get(int x, int y) const {
    assert(in_bounds(x, y));
    return (words_[static_cast<std::size_t>(y) * wpl_ + (x >> 6)] >>
            (x & 63)) & 1u;
  }

  void set(int x, int y, bool value) {
    assert(in_bounds(x, y));
    const std::uint64_t bit = 1ull << (x & 63);
    std::uint64_t& w = words_[static_cast<std::size_t>(y) * wpl_ + (x >> 6)];
    if (value) {
      w |= bit;
    } else {
      w &= ~bit;
    }
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  const std::uint64_t* row(int y) const {
    return words_.data() + static_cast<std::size_t>(y) * wpl_;
  }
  std::uint64_t* row(int y) {
    return words_.data() + static_cast<std::size_t>(y) * wpl_;
  }

  /// Pixel (x, y) of the result is this set's (x - dx, y - dy); zero fill.
  BinarySet shifted(int dx, int dy) const;

  /// In-place union with `src` shifted by (dx, dy); avoids a temporary.
  void or_shifted(const BinarySet& src, int dx, int dy);

  BinarySet complemented() const;

  /// Same set surrounded by a background ring of `margin` pixels.
  BinarySet padded(int margin) const;

  /// Rectangle [x0, x0+w) x [y0, y0+h); must lie inside the grid.
  BinarySet cropped(int x0, int y0, int w, int h) const;

  void and_with(const BinarySet& other);
  void or_with(const BinarySet& other);
  void xor_with(const BinarySet& other);
  void subtract(const BinarySet& other);  // this \ other

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == static_cast<std::size_t>(width_) * height_; }
  bool is_subset_of(const BinarySet& other) const;

  bool operator==(const BinarySet& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           words_ == other.words_;
  }
  bool operator!=(const BinarySet& other) const { return !(*this == other); }

  /// Invariant: padding bits beyond `width` in each row word are zero.
  bool tail_bits_clear() const;

 private:
  void mask_tail();
  std::uint64_t tail_mask() const;

  int width_ = 0;
  int height_ = 0;
  int wpl_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bimonn
