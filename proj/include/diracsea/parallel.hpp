#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace diracsea {

/// Evaluates f(0..n-1) on a small pool of threads. Results land at their own
/// index, so output order never depends on scheduling. The exception from the
/// lowest failing index is rethrown.
template <typename F>
auto parallel_map(std::size_t n, F&& f, unsigned threads = 0)
    -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace diracsea
