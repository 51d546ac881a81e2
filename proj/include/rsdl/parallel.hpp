#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rsdl {

/// Splits [0, total) into a fixed number of chunks that does not depend on
/// the worker count, runs `fn(begin, end)` for each chunk on up to `workers`
/// threads and returns the per-chunk results in chunk order. Merging those
/// results left to right therefore gives bit-identical output for any
/// worker count.
template <class R, class Fn>
std::vector<R> map_chunks(std::uint64_t total, unsigned workers, Fn&& fn,
                          std::uint64_t chunk_count = 64) {
  if (total == 0) return {};
  chunk_count = std::max<std::uint64_t>(1, std::min(chunk_count, total));
  const std::uint64_t step = (total + chunk_count - 1) / chunk_count;
  chunk_count = (total + step - 1) / step;

  std::vector<R> results(chunk_count);
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t begin = c * step;
    const std::uint64_t end = std::min(total, begin + step);
    results[c] = fn(begin, end);
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), chunk_count));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) run_chunk(c);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t c = next++; c < chunk_count; c = next++) {
        try {
          run_chunk(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Runs `fn(i)` for every i in [0, n) and returns results indexed by i.
template <class R, class Fn>
std::vector<R> map_indexed(std::uint64_t n, unsigned workers, Fn&& fn) {
  auto chunks = map_chunks<std::vector<R>>(
      n, workers,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<R> out;
        out.reserve(end - begin);
        for (std::uint64_t i = begin; i < end; ++i) out.push_back(fn(i));
        return out;
      },
      n);
  std::vector<R> flat;
  flat.reserve(n);
  for (auto& c : chunks)
    for (auto& r : c) flat.push_back(std::move(r));
  return flat;
}

}  // namespace rsdl
