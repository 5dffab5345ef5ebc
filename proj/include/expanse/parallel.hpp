/* parallel.hpp -- thread-count policy for the OpenMP kernels */

#ifndef EXPANSE_PARALLEL_HPP
#define EXPANSE_PARALLEL_HPP

namespace expanse {

// Execution policy for the data-parallel kernels.  Every kernel has a serial
// reference path (threads == 1) that the parallel path must reproduce
// bit-for-bit; tests assert this and the benchmark tool compares timings.
struct ExecPolicy {
  int threads = 0;  // 0 = resolve from EXPANSE_THREADS / OpenMP defaults

  bool serial() const { return resolved_threads() == 1; }
  int resolved_threads() const;

  static ExecPolicy serial_policy() { return ExecPolicy{1}; }
};

// Number of threads the process would use by default: EXPANSE_THREADS if set
// (clamped to at least 1), otherwise the OpenMP runtime default, otherwise 1.
int default_thread_count();

}  // namespace expanse

#endif  // EXPANSE_PARALLEL_HPP
