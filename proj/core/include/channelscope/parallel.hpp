#ifndef CHANNELSCOPE_PARALLEL_HPP
#define CHANNELSCOPE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace chs {

/// Worker count: CHANNELSCOPE_THREADS if set (0 = auto), else hardware.
std::size_t thread_count();

/// Run fn(chunk_index) for chunk_index in [0, chunks); chunks are assigned
/// to workers deterministically, so results keyed by chunk index do not
/// depend on the thread count.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& fn);

}  // namespace chs

#endif
