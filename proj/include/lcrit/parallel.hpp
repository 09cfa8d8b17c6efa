#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lcrit {

/// Number of workers to use for a request of `requested` (0 = machine
/// parallelism).
inline unsigned worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs compute(i) for i in [0, n) on a pool of workers that pull indices
/// from a shared counter, and calls sink(i, result) on the calling thread
/// in increasing i. If compute throws at index k, every result before k is
/// still delivered, then the exception is rethrown.
template <typename Compute, typename Sink>
void ordered_parallel_for(std::size_t n, unsigned workers, Compute compute, Sink sink)
{
    using Result = decltype(compute(std::size_t{}));
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    std::vector<std::optional<Result>> results(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable ready;
    std::size_t failed_at = none;
    std::exception_ptr failure;

    auto work = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t const i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                Result r = compute(i);
                std::lock_guard lock(mu);
                results[i].emplace(std::move(r));
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
                stop = true;
            }
            ready.notify_all();
        }
    };

    unsigned const count = static_cast<unsigned>(std::min<std::size_t>(worker_count(workers), std::max<std::size_t>(n, 1)));
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w)
        pool.emplace_back(work);

    std::exception_ptr sink_failure;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<Result> r;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return results[i].has_value() || failed_at == i; });
            if (!results[i])
                break;
            r = std::move(results[i]);
            results[i].reset();
        }
        try {
            sink(i, *r);
        } catch (...) {
            sink_failure = std::current_exception();
            stop = true;
            break;
        }
    }
    stop = true;
    pool.clear();
    if (sink_failure)
        std::rethrow_exception(sink_failure);
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace lcrit
