#pragma once

#include <utility>
#include <vector>

#include "bimonn/binary_set.hpp"

namespace bimonn {

/// Structuring element: an odd-sided square mask whose origin is the center
/// pixel. Offsets run over [-radius, radius]^2.
class StructuringElement {
 public:
  explicit StructuringElement(int side);
  static StructuringElement from_mask(const BinarySet& mask);
  /// The single-pixel element {origin}.
  static StructuringElement origin_only();

  int side() const { return mask_.width(); }
  int radius() const { return side() / 2; }

  const BinarySet& mask() const { return mask_; }

  bool contains(int dx, int dy) const {
    const int r = radius();
    if (dx < -r || dx > r || dy < -r || dy > r) return false;
    return mask_.get(dx + r, dy + r);
  }

  void set_offset(int dx, int dy, bool value) {
    const int r = radius();
    mask_.set(dx + r, dy + r, value);
  }

  /// All set offsets, scanned row-major.
  std::vector<std::pair<int, int>> offsets() const;

  std::size_t size() const { return mask_.count(); }
  bool empty() const { return mask_.empty(); }

  /// Point reflection through the origin.
  StructuringElement reflected() const;

  bool operator==(const StructuringElement& o) const {
    return mask_ == o.mask_;
  }
  bool operator!=(const StructuringElement& o) const { return !(*this == o); }

 private:
  BinarySet mask_;
};

}  // namespace bimonn
