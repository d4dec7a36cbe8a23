#include "bimonn/binary_set.hpp"

#include <bit>
#include <stdexcept>

namespace bimonn {

namespace {

/// dst row (dst_wpl words, dst_width pixels) = src row shifted by dx pixels,
/// zero fill. Words outside [0, src_wpl) read as zero.
void shift_row_into(const std::uint64_t* src, int src_wpl, std::uint64_t* dst,
                    int dst_wpl, int dx) {
  auto src_word = [&](int i) -> std::uint64_t {
    return (i >= 0 && i < src_wpl) ? src[i] : 0ull;
  };
  if (dx >= 0) {
    const int wo = dx >> 6;
    const int bo = dx & 63;
    if (bo == 0) {
      for (int i = 0; i < dst_wpl; ++i) dst[i] = src_word(i - wo);
    } else {
      for (int i = 0; i < dst_wpl; ++i) {
        dst[i] = (src_word(i - wo) << bo) | (src_word(i - wo - 1) >> (64 - bo));
      }
    }
  } else {
    const int e = -dx;
    const int wo = e >> 6;
    const int bo = e & 63;
    if (bo == 0) {
      for (int i = 0; i < dst_wpl; ++i) dst[i] = src_word(i + wo);
    } else {
      for (int i = 0; i < dst_wpl; ++i) {
        dst[i] = (src_word(i + wo) >> bo) | (src_word(i + wo + 1) << (64 - bo));
      }
    }
  }
}

void or_shift_row_into(const std::uint64_t* src, int src_wpl,
                       std::uint64_t* dst, int dst_wpl, int dx) {
  auto src_word = [&](int i) -> std::uint64_t {
    return (i >= 0 && i < src_wpl) ? src[i] : 0ull;
  };
  if (dx >= 0) {
    const int wo = dx >> 6;
    const int bo = dx & 63;
    if (bo == 0) {
      for (int i = 0; i < dst_wpl; ++i) dst[i] |= src_word(i - wo);
    } else {
      for (int i = 0; i < dst_wpl; ++i) {
        dst[i] |=
            (src_word(i - wo) << bo) | (src_word(i - wo - 1) >> (64 - bo));
      }
    }
  } else {
    const int e = -dx;
    const int wo = e >> 6;
    const int bo = e & 63;
    if (bo == 0) {
      for (int i = 0; i < dst_wpl; ++i) dst[i] |= src_word(i + wo);
    } else {
      for (int i = 0; i < dst_wpl; ++i) {
        dst[i] |=
            (src_word(i + wo) >> bo) | (src_word(i + wo + 1) << (64 - bo));
      }
    }
  }
}

}  // namespace

BinarySet::BinarySet(int width, int height)
    : width_(width), height_(height), wpl_((width + 63) >> 6) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("BinarySet: dimensions must be positive");
  }
  words_.assign(static_cast<std::size_t>(wpl_) * height_, 0ull);
}

BinarySet BinarySet::full(int width, int height) {
  BinarySet s(width, height);
  for (auto& w : s.words_) w = ~0ull;
  s.mask_tail();
  return s;
}

std::uint64_t BinarySet::tail_mask() const {
  const int used = width_ & 63;
  return used == 0 ? ~0ull : ((1ull << used) - 1);
}

void BinarySet::mask_tail() {
  const std::uint64_t m = tail_mask();
  if (m == ~0ull) return;
  for (int y = 0; y < height_; ++y) row(y)[wpl_ - 1] &= m;
}

bool BinarySet::tail_bits_clear() const {
  const std::uint64_t m = tail_mask();
  if (m == ~0ull) return true;
  for (int y = 0; y < height_; ++y) {
    if (row(y)[wpl_ - 1] & ~m) return false;
  }
  return true;
}

BinarySet BinarySet::shifted(int dx, int dy) const {
  BinarySet out(width_, height_);
  const int y_lo = std::max(0, dy);
  const int y_hi = std::min(height_, height_ + dy);
  for (int y = y_lo; y < y_hi; ++y) {
    shift_row_into(row(y - dy), wpl_, out.row(y), wpl_, dx);
  }
  out.mask_tail();
  assert(out.tail_bits_clear());
  return out;
}

void BinarySet::or_shifted(const BinarySet& src, int dx, int dy) {
  if (!same_shape(src)) {
    throw std::invalid_argument("BinarySet::or_shifted: shape mismatch");
  }
  const int y_lo = std::max(0, dy);
  const int y_hi = std::min(height_, height_ + dy);
  for (int y = y_lo; y < y_hi; ++y) {
    or_shift_row_into(src.row(y - dy), wpl_, row(y), wpl_, dx);
  }
  mask_tail();
}

BinarySet BinarySet::complemented() const {
  BinarySet out(width_, height_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.mask_tail();
  return out;
}

BinarySet BinarySet::padded(int margin) const {
  if (margin < 0) throw std::invalid_argument("BinarySet::padded: margin < 0");
  if (margin == 0) return *this;
  BinarySet out(width_ + 2 * margin, height_ + 2 * margin);
  for (int y = 0; y < height_; ++y) {
    shift_row_into(row(y), wpl_, out.row(y + margin), out.wpl_, margin);
  }
  out.mask_tail();
  return out;
}

BinarySet BinarySet::cropped(int x0, int y0, int w, int h) const {
  if (x0 < 0 || y0 < 0 || w <= 0 || h <= 0 || x0 + w > width_ ||
      y0 + h > height_) {
    throw std::invalid_argument("BinarySet::cropped: region out of bounds");
  }
  BinarySet out(w, h);
  for (int y = 0; y < h; ++y) {
    shift_row_into(row(y0 + y), wpl_, out.row(y), out.wpl_, -x0);
  }
  out.mask_tail();
  return out;
}

void BinarySet::and_with(const BinarySet& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("BinarySet::and_with: shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void BinarySet::or_with(const BinarySet& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("BinarySet::or_with: shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void BinarySet::xor_with(const BinarySet& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("BinarySet::xor_with: shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

void BinarySet::subtract(const BinarySet& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("BinarySet::subtract: shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

std::size_t BinarySet::count() const {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BinarySet::empty() const {
  for (const auto w : words_) {
    if (w) return false;
  }
  return true;
}

bool BinarySet::is_subset_of(const BinarySet& other) const {
  if (!same_shape(other)) {
    throw std::invalid_argument("BinarySet::is_subset_of: shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

}  // namespace bimonn
