#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace hopfchi {

// Chunked deterministic map-reduce over the index range [0, count).
// `work(begin, end)` returns a partial accumulator; `combine` receives the
// partials in chunk order, so the outcome never depends on scheduling.
template <typename Work, typename Combine>
void parallel_chunks(std::size_t count, int jobs, Work&& work, Combine&& combine) {
    using Acc = decltype(work(std::size_t{0}, std::size_t{0}));
    std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    workers = std::min(workers, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        if (count > 0) combine(work(0, count));
        return;
    }

    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::optional<Acc>> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end, w] {
            try {
                results[w].emplace(work(begin, end));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& r : results)
        if (r.has_value()) combine(std::move(*r));
}

}  // namespace hopfchi
