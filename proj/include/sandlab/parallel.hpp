#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sandlab {

/// Hardware concurrency, capped by SANDPILE_LAB_THREADS when set.
unsigned worker_count();

/// Splits [0, count) into contiguous chunks and evaluates body(begin, end) for
/// each on its own thread. Results come back in chunk (index) order, so
/// concatenating them is deterministic regardless of the worker count.
template <typename Body>
auto map_chunks(std::size_t count, Body body) -> std::vector<decltype(body(std::size_t{}, std::size_t{}))> {
    using Result = decltype(body(std::size_t{}, std::size_t{}));
    const std::size_t workers =
        std::clamp<std::size_t>(count / 4096, 1, worker_count());
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = body(0, count);
        return results;
    }
    const std::size_t per = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(count, w * per);
            const std::size_t end = std::min(count, begin + per);
            threads.emplace_back([&, w, begin, end] {
                try {
                    results[w] = body(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace sandlab
