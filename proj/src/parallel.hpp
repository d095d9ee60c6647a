#ifndef PERMCLASS_SRC_PARALLEL_HPP
#define PERMCLASS_SRC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>

#include "permclass/verify.hpp"

namespace permclass::detail {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Smallest i in [0, count) with pred(i), scanning contiguous chunks on
/// several threads. The answer does not depend on the thread count.
inline std::optional<std::size_t>
first_index_where(std::size_t count, std::size_t jobs,
                  const std::function<bool(std::size_t)> &pred) {
  if (count == 0)
    return std::nullopt;
  jobs = resolve_jobs(jobs);
  const std::size_t chunk = std::max<std::size_t>(1, count / (jobs * 16));
  const std::size_t chunks = (count + chunk - 1) / chunk;
  std::atomic<std::size_t> best{npos};
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      if (i >= best.load(std::memory_order_relaxed))
        return;
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  const std::size_t b = best.load();
  if (b == npos)
    return std::nullopt;
  return b;
}

} // namespace permclass::detail

#endif
