#pragma once

#include "bimonn/real_grid.hpp"

namespace bimonn {

/// out(k) = sum over kernel offsets i of kernel(i) * input(k - i), where the
/// sum keeps only in-grid k - i (outside the grid counts as zero). The kernel
/// must be square with odd side; its center is offset (0, 0).
RealGrid correlate(const RealGrid& input, const RealGrid& kernel);

/// Gradient of `correlate` with respect to the kernel: given d_output of the
/// same shape as the input, returns the side x side grid
///   g(i) = sum over in-grid k of d_output(k) * input(k - i).
RealGrid correlate_kernel_gradient(const RealGrid& input,
                                   const RealGrid& d_output, int side);

/// Point reflection of a square kernel through its center.
RealGrid reflect_kernel(const RealGrid& kernel);

}  // namespace bimonn
