#include "panofield/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace panofield {

namespace {

int g_thread_count = 0;  // 0 = unresolved

int resolve_default() {
    if (const char* env = std::getenv("PANOFIELD_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Persistent pool. Workers sleep between parallel_for calls; chunks are
// dispensed through a shared atomic counter so scheduling never affects
// which data a chunk touches.
class Pool {
  public:
    static Pool& instance() {
        static Pool pool;
        return pool;
    }

    void run(int workers, int64_t num_chunks, const std::function<void(int64_t)>& fn) {
        std::unique_lock<std::mutex> run_lock(run_mutex_);
        ensure_workers(workers - 1);
        fn_ = &fn;
        next_chunk_.store(0, std::memory_order_relaxed);
        num_chunks_ = num_chunks;
        error_ = nullptr;
        {
            std::lock_guard<std::mutex> lk(mutex_);
            pending_ = static_cast<int>(threads_.size());
            ++generation_;
        }
        cv_.notify_all();
        work();  // caller participates
        {
            std::unique_lock<std::mutex> lk(mutex_);
            done_cv_.wait(lk, [&] { return pending_ == 0; });
        }
        fn_ = nullptr;
        if (error_) std::rethrow_exception(error_);
    }

  private:
    Pool() = default;
    ~Pool() {
        {
            std::lock_guard<std::mutex> lk(mutex_);
            stop_ = true;
            ++generation_;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    void ensure_workers(int n) {
        if (static_cast<int>(threads_.size()) >= n) return;
        std::lock_guard<std::mutex> lk(mutex_);
        while (static_cast<int>(threads_.size()) < n) {
            uint64_t birth_gen = generation_;
            threads_.emplace_back([this, birth_gen] { worker_loop(birth_gen); });
        }
    }

    void worker_loop(uint64_t seen) {
        for (;;) {
            {
                std::unique_lock<std::mutex> lk(mutex_);
                cv_.wait(lk, [&] { return generation_ != seen || stop_; });
                if (stop_) return;
                seen = generation_;
            }
            work();
            {
                std::lock_guard<std::mutex> lk(mutex_);
                if (--pending_ == 0) done_cv_.notify_all();
            }
        }
    }

    void work() {
        const std::function<void(int64_t)>* fn = fn_;
        if (!fn) return;
        for (;;) {
            int64_t chunk = next_chunk_.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= num_chunks_) break;
            try {
                (*fn)(chunk);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mutex_);
                if (!error_) error_ = std::current_exception();
            }
        }
    }

    std::mutex run_mutex_;
    std::mutex mutex_;
    std::condition_variable cv_;
    std::condition_variable done_cv_;
    std::vector<std::thread> threads_;
    const std::function<void(int64_t)>* fn_ = nullptr;
    std::atomic<int64_t> next_chunk_{0};
    int64_t num_chunks_ = 0;
    int pending_ = 0;
    uint64_t generation_ = 0;
    bool stop_ = false;
    std::exception_ptr error_;
};

}  // namespace

int thread_count() {
    if (g_thread_count <= 0) g_thread_count = resolve_default();
    return g_thread_count;
}

void set_thread_count(int n) { g_thread_count = n > 0 ? n : resolve_default(); }

void parallel_for(int64_t num_chunks, const std::function<void(int64_t)>& fn) {
    if (num_chunks <= 0) return;
    int workers = thread_count();
    if (workers <= 1 || num_chunks == 1) {
        for (int64_t c = 0; c < num_chunks; ++c) fn(c);
        return;
    }
    Pool::instance().run(workers, num_chunks, fn);
}

void parallel_for_range(int64_t n, int64_t grain,
                        const std::function<void(int64_t, int64_t)>& fn) {
    if (n <= 0) return;
    if (grain <= 0) grain = 1;
    int64_t chunks = (n + grain - 1) / grain;
    parallel_for(chunks, [&](int64_t c) {
        int64_t begin = c * grain;
        int64_t end = begin + grain < n ? begin + grain : n;
        fn(begin, end);
    });
}

}  // namespace panofield
