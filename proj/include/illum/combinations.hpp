#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace illum {

using IndexSet = std::vector<std::size_t>;

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;  // exact: r * num is divisible by i at every step
    }
    return r;
}

/// Visits every k-subset of {0..n-1} in lexicographic order until `fn` returns false.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    IndexSet idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(std::span<const std::size_t>(idx))) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// First k-subset (lexicographic) satisfying `pred`, searched by `threads`
/// workers. Each worker owns the subsets whose rank is congruent to its id,
/// so the reported minimum is independent of scheduling.
template <typename Pred>
std::optional<IndexSet> find_first_combination(std::size_t n, std::size_t k, Pred&& pred, unsigned threads = 1) {
    if (threads <= 1) {
        std::optional<IndexSet> found;
        for_each_combination(n, k, [&](std::span<const std::size_t> s) {
            if (pred(s)) {
                found.emplace(s.begin(), s.end());
                return false;
            }
            return true;
        });
        return found;
    }

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::optional<IndexSet> best_set;
    std::exception_ptr failure;
    std::mutex mu;

    auto worker = [&](unsigned id) {
        try {
            std::uint64_t rank = 0;
            for_each_combination(n, k, [&](std::span<const std::size_t> s) {
                const std::uint64_t r = rank++;
                if (r >= best.load()) return false;
                if (r % threads != id) return true;
                if (!pred(s)) return true;
                std::lock_guard lock(mu);
                if (r < best.load()) {
                    best = r;
                    best_set.emplace(s.begin(), s.end());
                }
                return false;
            });
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            best = 0;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return best_set;
}

}  // namespace illum
