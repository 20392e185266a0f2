#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semihopf::par {

// Runtime switch between the OpenMP kernels and the serial reference path.
// Both paths produce bit-identical results; the serial one exists so tests
// can diff against it and so single-threaded builds stay usable.
bool& parallel_enabled();

int worker_count();

namespace detail {
template <class W, class Fn>
std::vector<std::pair<std::size_t, W>> collect_serial(std::size_t n, Fn&& fn) {
    std::vector<std::pair<std::size_t, W>> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (auto w = fn(i)) out.emplace_back(i, std::move(*w));
    }
    return out;
}
}  // namespace detail

// Evaluates fn(i) for i in [0,n); fn returns std::optional<W>. Hits are
// returned sorted by index, so the result does not depend on scheduling.
template <class W, class Fn>
std::vector<std::pair<std::size_t, W>> collect(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (parallel_enabled() && n > 1) {
        std::vector<std::vector<std::pair<std::size_t, W>>> buckets(
            static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            auto w = fn(static_cast<std::size_t>(i));
            if (w) {
                buckets[static_cast<std::size_t>(omp_get_thread_num())].emplace_back(
                    static_cast<std::size_t>(i), std::move(*w));
            }
        }
        std::vector<std::pair<std::size_t, W>> out;
        for (auto& b : buckets) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
#endif
    return detail::collect_serial<W>(n, std::forward<Fn>(fn));
}

// Indices i in [0,n) with keep(i) true, in increasing order.
template <class Fn>
std::vector<std::size_t> filter(std::size_t n, Fn&& keep) {
    std::vector<std::size_t> out;
#ifdef _OPENMP
    if (parallel_enabled() && n > 1) {
        std::vector<char> flags(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            if (keep(static_cast<std::size_t>(i))) flags[static_cast<std::size_t>(i)] = 1;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (flags[i]) out.push_back(i);
        return out;
    }
#endif
    for (std::size_t i = 0; i < n; ++i)
        if (keep(i)) out.push_back(i);
    return out;
}

}  // namespace semihopf::par
