#include "adiawalk/parallel.hpp"

#include <omp.h>

namespace adiawalk {

namespace {
int default_threads() {
  static const int n = omp_get_max_threads();
  return n;
}
}  // namespace

void set_thread_count(int n) {
  default_threads();
  omp_set_num_threads(n > 0 ? n : default_threads());
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace adiawalk
