#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace krawbound {

/// Worker count: an active ThreadBudgetScope, else KRAWBOUND_THREADS if set to a
/// positive integer, else the hardware count.
unsigned thread_budget();

/// Caps thread_budget() at `threads` while alive; 0 leaves it unchanged.
class ThreadBudgetScope {
public:
    explicit ThreadBudgetScope(unsigned threads);
    ~ThreadBudgetScope();
    ThreadBudgetScope(const ThreadBudgetScope&) = delete;
    ThreadBudgetScope& operator=(const ThreadBudgetScope&) = delete;

private:
    unsigned previous_;
};

/// Runs task(0..count-1) on up to thread_budget() threads. Each index runs exactly
/// once; the first exception is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

/// Results are stored by index, so the output order never depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace krawbound
