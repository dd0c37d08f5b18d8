#include "krawbound/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace krawbound {

namespace {
std::atomic<unsigned> g_scoped_budget{0};
}  // namespace

ThreadBudgetScope::ThreadBudgetScope(unsigned threads) : previous_(g_scoped_budget.load()) {
    if (threads > 0) g_scoped_budget.store(threads);
}

ThreadBudgetScope::~ThreadBudgetScope() { g_scoped_budget.store(previous_); }

unsigned thread_budget() {
    if (const unsigned scoped = g_scoped_budget.load(); scoped > 0) return scoped;
    if (const char* env = std::getenv("KRAWBOUND_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
    const std::size_t workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_lock);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace krawbound
