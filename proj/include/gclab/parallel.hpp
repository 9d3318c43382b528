#ifndef GCLAB_PARALLEL_HPP
#define GCLAB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace gclab {

/// Thread count from the GCLAB_THREADS environment variable, falling back to
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Applies a pure function to 0..count-1 on `threads` workers and gathers the
/// results by index, so the output is identical for every thread count.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    static_assert(!std::is_same_v<R, bool>, "use char for parallel flags");
    std::vector<R> out(count);
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> workers;
    const unsigned wanted = std::min<std::size_t>(threads, count);
    for (unsigned t = 0; t < wanted; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load(std::memory_order_relaxed)) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace gclab

#endif
