#pragma once

#include <cstddef>
#include <functional>

namespace esfp {

/// Particles are processed in fixed-size blocks. Per-block partial results are
/// combined in block order, so reductions do not depend on the thread count.
inline constexpr std::size_t kBlockSize = 4096;

inline std::size_t block_count(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

/// Resolves a requested thread count; 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Calls fn(block) for every block in [0, n_blocks), spreading contiguous
/// block ranges over `threads` workers.
void for_each_block(std::size_t n_blocks, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace esfp
