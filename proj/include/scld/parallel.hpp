#ifndef SCLD_PARALLEL_HPP
#define SCLD_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace scld {

/// Chunk-claiming parallel loop; bodies must only write to their own index.
/// The first exception wins and is rethrown after all workers join.
void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t)>& body);

}  // namespace scld

#endif
