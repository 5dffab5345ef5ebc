/* parallel.cpp -- thread-count policy */

#include "expanse/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef EXPANSE_HAVE_OPENMP
#include <omp.h>
#endif

namespace expanse {

int default_thread_count() {
  if (const char* env = std::getenv("EXPANSE_THREADS")) {
    try {
      int n = std::stoi(env);
      return n < 1 ? 1 : n;
    } catch (...) {
      return 1;
    }
  }
#ifdef EXPANSE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int ExecPolicy::resolved_threads() const {
  if (threads > 0) return threads;
  return default_thread_count();
}

}  // namespace expanse
