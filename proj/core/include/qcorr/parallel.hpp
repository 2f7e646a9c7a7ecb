#ifndef QCORR_PARALLEL_HPP
#define QCORR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qcorr {

/// Number of worker threads: the QCORR_THREADS environment variable when it
/// parses as a positive integer, otherwise hardware concurrency.
std::size_t worker_thread_count();

/// Runs body(i) for i in [0, n). Work items must be independent; each one
/// should write only to its own slot of a caller-owned buffer, so the result
/// does not depend on the thread count or on scheduling. The first exception
/// thrown by any item is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qcorr

#endif
