// parallel.hpp
// Deterministic range partitioning. A half-open range is cut into a fixed
// number of contiguous chunks; workers claim chunks from a shared counter and
// write each result into its chunk's slot, so callers always merge in range
// order no matter how many threads ran.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace primemat {

struct Chunk {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;  // exclusive
};

// Splits [begin, end) into `parts` contiguous chunks whose sizes differ by at
// most one. Empty ranges produce no chunks.
inline std::vector<Chunk> partition_range(std::uint64_t begin, std::uint64_t end, std::uint64_t parts) {
    std::vector<Chunk> out;
    if (end <= begin) return out;
    const std::uint64_t total = end - begin;
    parts = std::clamp<std::uint64_t>(parts, 1, total);
    const std::uint64_t base = total / parts;
    const std::uint64_t extra = total % parts;
    std::uint64_t at = begin;
    for (std::uint64_t i = 0; i < parts; ++i) {
        const std::uint64_t len = base + (i < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(Chunk) for every chunk and returns the results in chunk order.
// The chunk layout depends only on the range and `chunks`, never on
// `threads`. The first exception thrown by a worker is rethrown.
template <typename Fn>
auto map_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunks, unsigned threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, Chunk>> {
    using Result = std::invoke_result_t<Fn&, Chunk>;
    const auto parts = partition_range(begin, end, chunks);
    std::vector<Result> results(parts.size());
    threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(parts.size(), 1)));

    if (threads <= 1) {
        for (std::size_t i = 0; i < parts.size(); ++i) results[i] = fn(parts[i]);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parts.size()) return;
            try {
                results[i] = fn(parts[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(parts.size());
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace primemat
