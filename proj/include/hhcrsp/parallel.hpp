#pragma once

#include <cstddef>
#include <functional>

namespace hhcrsp {

// Runs fn(i) for every i in [0, n). With workers <= 1 the calls are inline.
// fn must write only to per-index state so the result is independent of the
// partition; this is what keeps seeded runs identical across worker counts.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hhcrsp
