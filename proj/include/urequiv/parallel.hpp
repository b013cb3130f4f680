// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace urequiv {

/// Worker count: UR_EQUIV_THREADS if set and positive, otherwise (0 or
/// unset) the hardware concurrency.
int thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads with a
/// static contiguous partition. Callers write results into per-index slots,
/// so output is identical for any worker count. Exceptions from workers are
/// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace urequiv
