#ifndef AEROPLAN_PARALLEL_H
#define AEROPLAN_PARALLEL_H

#include <cstddef>
#include <functional>

namespace aeroplan {

// Worker count from AEROPLAN_THREADS, else the hardware concurrency.
int WorkerCount();

// Runs fn(0..n-1) on up to `threads` workers (0 selects WorkerCount()).
// Callers write results into per-index slots, so output never depends on
// scheduling. Nested calls from inside a worker run serially. The first
// exception thrown by any task is rethrown.
void ParallelFor(size_t n, const std::function<void(size_t)>& fn, int threads = 0);

}  // namespace aeroplan

#endif
