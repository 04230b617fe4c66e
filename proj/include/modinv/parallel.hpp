#pragma once

// A small fork-join helper with order-preserving results, and a wall-clock
// budget that long computations poll.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "modinv/error.hpp"

namespace modinv {

class Deadline {
public:
    Deadline() = default;
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds)))
    {
    }

    /// Reads MODINV_BUDGET_SECS; unset or unparsable means no limit.
    static Deadline from_env();

    bool expired() const { return end_ && std::chrono::steady_clock::now() > *end_; }
    /// Throws Errc::BudgetExceeded once the deadline has passed.
    void check() const
    {
        if (expired())
            throw Error(Errc::BudgetExceeded, "time budget exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Applies fn to every item using up to `workers` threads. results[i] is
/// fn(items[i]) regardless of scheduling. The first exception thrown by any
/// call is rethrown after all threads have stopped.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(items.front()))>
{
    using R = decltype(fn(items.front()));
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load())
                return;
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };

    unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
    if (n == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(run);
        for (auto& th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace modinv
