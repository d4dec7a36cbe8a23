#pragma once

#include <functional>

namespace bimonn {

/// Worker count for data-parallel loops: BIMONN_THREADS if set (min 1),
/// otherwise the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n). Bodies must only write to their own slot of
/// any shared output; reductions over the results stay with the caller so the
/// summation order is fixed no matter how many workers ran.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace bimonn
