#pragma once

// Deterministic data-parallel reductions.
//
// Work is cut into fixed-size blocks whose boundaries depend only on the
// problem size, never on the thread count. Each block is summed
// left-to-right by whichever thread owns it, then the block partials are
// combined serially in block order. The result is therefore bitwise
// identical for any OMP_NUM_THREADS.

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace rmt::par {

inline constexpr std::size_t kBlock = 256;

template <class T, class Term>
T ordered_sum(std::size_t n, Term&& term, std::size_t block = kBlock) {
    if (n == 0) return T{};
    const std::size_t nb = (n + block - 1) / block;
    std::vector<T> partial(nb, T{});
    std::vector<std::exception_ptr> failure(nb);
    const long long nbl = static_cast<long long>(nb);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < nbl; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * block;
        const std::size_t hi = lo + block < n ? lo + block : n;
        try {
            T acc{};
            for (std::size_t i = lo; i < hi; ++i) acc += term(i);
            partial[static_cast<std::size_t>(b)] = acc;
        } catch (...) {
            failure[static_cast<std::size_t>(b)] = std::current_exception();
        }
    }
    // Exceptions cannot cross the parallel region; rethrow the lowest-block one.
    for (auto& e : failure)
        if (e) std::rethrow_exception(e);
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

// Reference: the same blocking done by one thread. Bitwise equal to ordered_sum.
template <class T, class Term>
T blocked_sum_serial(std::size_t n, Term&& term, std::size_t block = kBlock) {
    T total{};
    for (std::size_t lo = 0; lo < n; lo += block) {
        const std::size_t hi = lo + block < n ? lo + block : n;
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        total += acc;
    }
    return total;
}

// Reference: naive left-to-right accumulation.
template <class T, class Term>
T naive_sum(std::size_t n, Term&& term) {
    T total{};
    for (std::size_t i = 0; i < n; ++i) total += term(i);
    return total;
}

// Independent evaluations written to distinct slots; order-free by construction.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    std::vector<std::exception_ptr> failure(n);
    const long long nl = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < nl; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            failure[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : failure)
        if (e) std::rethrow_exception(e);
}

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace rmt::par
