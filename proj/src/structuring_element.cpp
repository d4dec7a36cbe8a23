#include "bimonn/structuring_element.hpp"

#include <stdexcept>

namespace bimonn {

StructuringElement::StructuringElement(int side) : mask_(side, side) {
  if (side < 1 || side % 2 == 0) {
    throw std::invalid_argument("StructuringElement: side must be odd >= 1");
  }
}

StructuringElement StructuringElement::from_mask(const BinarySet& mask) {
  if (mask.width() != mask.height()) {
    throw std::invalid_argument("StructuringElement: mask must be square");
  }
  StructuringElement se(mask.width());
  se.mask_ = mask;
  return se;
}

StructuringElement StructuringElement::origin_only() {
  StructuringElement se(1);
  se.set_offset(0, 0, true);
  return se;
}

std::vector<std::pair<int, int>> StructuringElement::offsets() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size());
  const int r = radius();
  for (int y = 0; y < side(); ++y) {
    for (int x = 0; x < side(); ++x) {
      if (mask_.get(x, y)) out.emplace_back(x - r, y - r);
    }
  }
  return out;
}

StructuringElement StructuringElement::reflected() const {
  const int s = side();
  StructuringElement out(s);
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      if (mask_.get(x, y)) out.mask_.set(s - 1 - x, s - 1 - y, true);
    }
  }
  return out;
}

}  // namespace bimonn
