#ifndef ANNIGRAPH_UTIL_HPP
#define ANNIGRAPH_UTIL_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace annigraph {

std::vector<int64_t> divisors(int64_t n);          // ascending, includes 1 and n
int64_t smallest_prime_factor(int64_t n);          // n >= 2

// runs fn(i) for i in [0, n) on the worker pool; fn must only touch
// per-index state. Worker count comes from ANNIGRAPH_WORKERS when set.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
int worker_count();

} // namespace annigraph

#endif
