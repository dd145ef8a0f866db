#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rplane {

/// Thread count used when a caller passes 0: the RPLANE_THREADS environment
/// variable if set and positive, otherwise std::thread::hardware_concurrency().
unsigned default_thread_count();

/// Evaluates f(i) for i in [0, n) on up to `threads` workers and returns the
/// values in index order.  f must be safe to call concurrently.
std::vector<std::complex<double>> parallel_map(std::size_t n, unsigned threads,
                                               const std::function<std::complex<double>(std::size_t)>& f);

/// Pairwise (tree) summation in index order.  The reduction order depends only
/// on the length of the input, so results are bit-stable across thread counts.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

}  // namespace rplane
