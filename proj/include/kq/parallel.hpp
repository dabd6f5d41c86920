#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kq {

// Worker cap: KQ_THREADS env var if set (>=1), else hardware concurrency.
int max_threads();

// Runs fn(i) for i in [0, n). Work items are pure and write only to their
// own output slot, so results do not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace kq
