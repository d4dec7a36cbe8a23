#include "bimonn/certify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bimonn {

ActivationWindow activation_window(OpKind op, std::span<const double> weights,
                                   std::span<const AlmostBinaryRange> ranges,
                                   std::span<const std::uint8_t> members) {
  const std::size_t m = weights.size();
  if (ranges.size() != m || members.size() != m) {
    throw std::invalid_argument("activation_window: size mismatch");
  }
  bool any_member = false;
  double sum_pos = 0.0;       // sum of nonnegative weights, all indices
  double sum_neg = 0.0;       // sum of nonpositive weights, all indices
  double sum_s_pos_u = 0.0;   // member nonnegative weights scaled by u
  double sum_s_pos_v = 0.0;   // member nonnegative weights scaled by v
  double sum_out_pos = 0.0;   // nonnegative weights outside the member set
  double min_wv = std::numeric_limits<double>::infinity();   // min over S of w*v
  double min_w1u = std::numeric_limits<double>::infinity();  // min over S of w*(1-u)
  for (std::size_t i = 0; i < m; ++i) {
    const double w = weights[i];
    if (w >= 0.0) sum_pos += w;
    if (w <= 0.0) sum_neg += w;
    if (members[i]) {
      any_member = true;
      if (w >= 0.0) {
        sum_s_pos_u += w * ranges[i].u;
        sum_s_pos_v += w * ranges[i].v;
      }
      min_wv = std::min(min_wv, w * ranges[i].v);
      min_w1u = std::min(min_w1u, w * (1.0 - ranges[i].u));
    } else if (w >= 0.0) {
      sum_out_pos += w;
    }
  }
  if (!any_member) {
    throw std::invalid_argument("activation_window: empty member set");
  }
  ActivationWindow win;
  if (op == OpKind::Dilation) {
    win.lower = sum_out_pos + sum_s_pos_u;
    win.upper = min_wv + sum_neg;
  } else {
    win.lower = sum_pos - min_w1u;
    win.upper = sum_s_pos_v + sum_neg;
  }
  return win;
}

double window_dissimilarity(const ActivationWindow& window, double bias) {
  return std::max({0.0, window.lower - bias, bias - window.upper});
}

ThresholdCertificate best_threshold_certificate(
    std::span<const double> weights, std::span<const AlmostBinaryRange> ranges,
    double bias) {
  const std::size_t m = weights.size();
  if (m == 0) {
    throw std::invalid_argument("best_threshold_certificate: no weights");
  }
  if (ranges.size() != m) {
    throw std::invalid_argument("best_threshold_certificate: size mismatch");
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });

  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (weights[i] >= 0.0) sum_pos += weights[i];
    if (weights[i] <= 0.0) sum_neg += weights[i];
  }

  struct Candidate {
    double d;
    std::size_t size;
    OpKind op;
  };
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.size != b.size) return a.size > b.size;
    return a.op == OpKind::Erosion && b.op == OpKind::Dilation;
  };

  Candidate best{std::numeric_limits<double>::infinity(), 0, OpKind::Dilation};
  std::size_t best_prefix = 0;

  double sum_s_pos = 0.0;
  double sum_s_pos_u = 0.0;
  double sum_s_pos_v = 0.0;
  double min_wv = std::numeric_limits<double>::infinity();
  double min_w1u = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = order[j];
    const double w = weights[i];
    if (w >= 0.0) {
      sum_s_pos += w;
      sum_s_pos_u += w * ranges[i].u;
      sum_s_pos_v += w * ranges[i].v;
    }
    min_wv = std::min(min_wv, w * ranges[i].v);
    min_w1u = std::min(min_w1u, w * (1.0 - ranges[i].u));
    // A threshold set must take whole blocks of equal weights.
    if (j + 1 < m && weights[order[j + 1]] == w) continue;

    const double dil_lower = (sum_pos - sum_s_pos) + sum_s_pos_u;
    const double dil_upper = min_wv + sum_neg;
    const double ero_lower = sum_pos - min_w1u;
    const double ero_upper = sum_s_pos_v + sum_neg;
    const Candidate ero{
        std::max({0.0, ero_lower - bias, bias - ero_upper}), j + 1,
        OpKind::Erosion};
    const Candidate dil{
        std::max({0.0, dil_lower - bias, bias - dil_upper}), j + 1,
        OpKind::Dilation};
    if (better(ero, best)) {
      best = ero;
      best_prefix = j + 1;
    }
    if (better(dil, best)) {
      best = dil;
      best_prefix = j + 1;
    }
  }

  ThresholdCertificate cert;
  cert.op = best.op;
  cert.members.assign(m, 0);
  for (std::size_t j = 0; j < best_prefix; ++j) cert.members[order[j]] = 1;
  // Recompute through the direct window so the certificate agrees bit-for-bit
  // with check-style evaluations of the same member set.
  cert.dissimilarity = window_dissimilarity(
      activation_window(cert.op, weights, ranges, cert.members), bias);
  return cert;
}

}  // namespace bimonn
