#pragma once

#include <cstddef>
#include <functional>

namespace specsat {

// Worker cap: SPECSAT_THREADS when set, otherwise the hardware count.
int worker_count();

// Runs fn(i) for every i in [0, count). fn must only touch state owned by
// slot i; merging the slots afterwards keeps results deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace specsat
