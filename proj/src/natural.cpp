#include "zeckorbit/natural.hpp"

#include <atomic>
#include <deque>
#include <mutex>

namespace zeckorbit {

namespace {

// Growing Fibonacci table. std::deque keeps element references stable while
// the table is extended under the mutex, so concurrent readers of already
// published entries are safe.
std::deque<Natural> g_fib{Natural(0), Natural(1)};
std::atomic<std::size_t> g_fib_ready{2};
std::mutex g_fib_mutex;

void ensure_fib(std::size_t count) {
    if (g_fib_ready.load(std::memory_order_acquire) >= count) return;
    std::lock_guard<std::mutex> lock(g_fib_mutex);
    while (g_fib.size() < count) {
        const std::size_t s = g_fib.size();
        g_fib.push_back(g_fib[s - 1] + g_fib[s - 2]);
        g_fib_ready.store(g_fib.size(), std::memory_order_release);
    }
}

}  // namespace

const Natural& fib(std::size_t i) {
    ensure_fib(i + 1);
    return g_fib[i];
}

std::size_t fib_leading_index(const Natural& n) {
    if (n < 1) throw DomainError("fib_leading_index: N must be >= 1");
    std::size_t hi = 4;
    while (fib(hi) <= n) hi *= 2;
    std::size_t lo = 2;  // fib(lo) <= n < fib(hi)
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (fib(mid) <= n) lo = mid; else hi = mid;
    }
    return lo;
}

std::size_t zeck_length(const Natural& n) { return fib_leading_index(n) - 1; }

std::size_t c_of_q(const Natural& q) {
    if (q < 2) throw DomainError("c_of_q: q must be >= 2");
    std::size_t c = 1;
    while (fib(c) < q) ++c;
    return c;
}

}  // namespace zeckorbit
