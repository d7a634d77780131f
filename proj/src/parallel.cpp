#include "schurpress/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace schurpress {

std::size_t configured_workers() {
    const char* env = std::getenv("SCHURPRESS_THREADS");
    std::size_t requested = 0;
    if (env != nullptr) {
        try {
            const long long v = std::stoll(env);
            requested = v > 0 ? static_cast<std::size_t>(v) : 0;
        } catch (...) {
            requested = 0;
        }
    }
    if (requested == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        requested = hw == 0 ? 1 : hw;
    }
    return requested;
}

void for_each_block(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
    if (n_blocks == 0) {
        return;
    }
    const std::size_t workers = std::min(configured_workers(), n_blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            fn(b);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        while (true) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks || failed.load()) {
                return;
            }
            try {
                fn(b);
            } catch (...) {
                if (!failed.exchange(true)) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace schurpress
