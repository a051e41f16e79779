#pragma once

// Deterministic parallel kernels. Work is split into fixed chunks of
// kChunk indices; each chunk is reduced serially in index order and the
// chunk partials are combined serially in chunk order. The result is
// therefore bit-identical for Mode::serial and Mode::openmp at any
// thread count. COULOMB5_THREADS caps the OpenMP worker count.

#include <cstddef>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coulomb5::par {

enum class Mode { serial, openmp };

inline constexpr std::size_t kChunk = 1024;

inline int env_thread_cap() {
    const char* s = std::getenv("COULOMB5_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
}

inline int worker_count(Mode mode, int threads_override = 0) {
    if (mode == Mode::serial) return 1;
#ifdef _OPENMP
    int n = threads_override > 0 ? threads_override : omp_get_max_threads();
    int cap = env_thread_cap();
    if (cap > 0 && cap < n) n = cap;
    return n > 0 ? n : 1;
#else
    (void)threads_override;
    return 1;
#endif
}

namespace detail {
inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }
}

// sum_{i<n} f(i), f: size_t -> double.
template <class F>
double reduce_sum(std::size_t n, F&& f, Mode mode = Mode::openmp, int threads_override = 0) {
    if (n == 0) return 0.0;
    const std::size_t nc = detail::chunk_count(n);
    std::vector<double> partial(nc, 0.0);
    [[maybe_unused]] const int nw = worker_count(mode, threads_override);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nw) if (mode == Mode::openmp && nw > 1)
#endif
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += f(i);
        partial[static_cast<std::size_t>(c)] = s;
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

// max_{i<n} f(i); n >= 1.
template <class F>
double reduce_max(std::size_t n, F&& f, Mode mode = Mode::openmp, int threads_override = 0) {
    const std::size_t nc = detail::chunk_count(n);
    std::vector<double> partial(nc, 0.0);
    [[maybe_unused]] const int nw = worker_count(mode, threads_override);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nw) if (mode == Mode::openmp && nw > 1)
#endif
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        double m = f(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) {
            double v = f(i);
            if (v > m) m = v;
        }
        partial[static_cast<std::size_t>(c)] = m;
    }
    double m = partial[0];
    for (double v : partial) {
        if (v > m) m = v;
    }
    return m;
}

// f(i) fills slot i of caller-owned storage; no reduction.
template <class F>
void for_each(std::size_t n, F&& f, Mode mode = Mode::openmp, int threads_override = 0) {
    [[maybe_unused]] const int nw = worker_count(mode, threads_override);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(nw) if (mode == Mode::openmp && nw > 1)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
}

}  // namespace coulomb5::par
