#ifndef MBPIRE_PARALLEL_HPP_
#define MBPIRE_PARALLEL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "mbpire/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbpire {

/// All Monte Carlo estimators are replica loops: replica r is a pure
/// function of (rng, r).  ExecMode::serial is the reference path used by
/// tests and the benchmark; ExecMode::openmp must produce bit-identical
/// results because replicas are stored by index and merged in index order.
enum class ExecMode { serial, openmp };

template <class T, class Fn>
std::vector<T> replica_map(i64 reps, ExecMode mode, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(reps));
  if (mode == ExecMode::serial) {
    for (i64 r = 0; r < reps; ++r) out[static_cast<std::size_t>(r)] = fn(r);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (i64 r = 0; r < reps; ++r) out[static_cast<std::size_t>(r)] = fn(r);
  return out;
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mbpire

#endif
