#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cxd {

// Splits [0, n) into `threads` contiguous shards and runs body(shard, begin, end)
// on each. Callers merge per-shard results in shard order, which keeps every
// output independent of the thread count.
template <typename Body>
void parallel_shards(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(threads ? threads : 1, n ? n : 1));
  auto range = [&](std::size_t s) {
    return std::pair<std::size_t, std::size_t>{n * s / shards, n * (s + 1) / shards};
  };
  if (shards == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> pool;
  pool.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    pool.emplace_back([&, s] {
      try {
        auto [b, e] = range(s);
        body(s, b, e);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t shard_count(std::size_t n, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(threads ? threads : 1, n ? n : 1));
}

}  // namespace cxd
