#pragma once

#include <cstddef>
#include <functional>

namespace schurpress {

/// Worker cap from SCHURPRESS_THREADS (0 or unset = hardware concurrency).
std::size_t configured_workers();

/// Runs fn(0..n_blocks-1), possibly concurrently. The block decomposition is
/// independent of the worker count, so any per-block state (RNG sub-streams,
/// partial sums stored by block index) yields identical results whether run
/// with 1 thread or many.
void for_each_block(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

}  // namespace schurpress
