#pragma once

#include <vector>

#include "bimonn/binary_set.hpp"
#include "bimonn/real_grid.hpp"
#include "bimonn/structuring_element.hpp"

namespace bimonn::morphology {

/// Union of translates of `image` by the SE offsets, restricted to the grid.
BinarySet dilate(const BinarySet& image, const StructuringElement& se);

/// Pixel k is kept iff every SE offset lands on foreground; outside the grid
/// counts as background.
BinarySet erode(const BinarySet& image, const StructuringElement& se);

BinarySet open(const BinarySet& image, const StructuringElement& se);
BinarySet close(const BinarySet& image, const StructuringElement& se);

/// close(I, S) minus I.
BinarySet black_tophat(const BinarySet& image, const StructuringElement& se);
/// I minus open(I, S).
BinarySet white_tophat(const BinarySet& image, const StructuringElement& se);

BinarySet complement(const BinarySet& image);

BinarySet union_all(const std::vector<BinarySet>& images);
BinarySet intersect_all(const std::vector<BinarySet>& images);

/// Dense reference path: pixel k is set iff
///   sum over kernel offsets i with k - i in the grid of
///   image(k - i) * kernel(i) >= threshold.
BinarySet thresholded_correlation(const RealGrid& image, const RealGrid& kernel,
                                  double threshold);

enum class MorphOp { Dilate, Erode, Open, Close, WhiteTophat, BlackTophat };

BinarySet apply(MorphOp op, const BinarySet& image,
                const StructuringElement& se);

/// Runs `op` on a seeded random image of the given size `repetitions` times;
/// returns megapixels processed per wall-clock second.
double bench_throughput(int image_size, const StructuringElement& se,
                        MorphOp op, int repetitions);

namespace detail {

/// Independent erosion route (intersection of shifted copies); the exported
/// erode() goes through pad/complement/dilate and is cross-checked against
/// this in the tests.
BinarySet erode_by_intersection(const BinarySet& image,
                                const StructuringElement& se);

}  // namespace detail

}  // namespace bimonn::morphology
