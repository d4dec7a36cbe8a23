#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bimonn {

/// Bounds for the forbidden open interval of an almost binary image: every
/// pixel value lies in [0, u] or [v, 1].
struct AlmostBinaryRange {
  double u = 0.0;
  double v = 1.0;
  bool valid() const { return 0.0 <= u && u < v && v <= 1.0; }
  bool operator==(const AlmostBinaryRange&) const = default;
};

/// The two elementary operator families a thresholded linear unit can
/// realize. Union aggregation behaves like a dilation, intersection like an
/// erosion; both share the same window algebra.
enum class OpKind { Dilation, Erosion };

/// Activation window [lower, upper): the unit is exactly the operator for
/// every bias inside it.
struct ActivationWindow {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double bias) const { return lower <= bias && bias < upper; }
};

/// Window of the operator selected by `members` (indicator over the weight
/// indices), for per-index almost-binary input ranges. With a uniform range
/// this is the single-neuron dilation/erosion test; with per-channel ranges
/// it is the union/intersection test.
ActivationWindow activation_window(OpKind op, std::span<const double> weights,
                                   std::span<const AlmostBinaryRange> ranges,
                                   std::span<const std::uint8_t> members);

/// max(0, lower - bias, bias - upper): zero iff the bias sits in the window.
double window_dissimilarity(const ActivationWindow& window, double bias);

struct ThresholdCertificate {
  OpKind op = OpKind::Dilation;
  std::vector<std::uint8_t> members;
  double dissimilarity = 0.0;
};

/// Minimal-dissimilarity operator among all weight-threshold member sets and
/// both operator kinds. Candidates are the sets {i | w_i >= tau} for tau in
/// the weight values, scanned once over the sorted weights with running
/// prefix sums. Ties are resolved deterministically: smaller dissimilarity,
/// then larger member count, then erosion before dilation.
ThresholdCertificate best_threshold_certificate(
    std::span<const double> weights, std::span<const AlmostBinaryRange> ranges,
    double bias);

}  // namespace bimonn
