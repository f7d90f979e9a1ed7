#pragma once

#include <cstddef>
#include <exception>

namespace adiawalk {

// 0 restores the runtime default.
void set_thread_count(int n);
int thread_count();

// Exceptions thrown by body are rethrown on the calling thread (the one from the lowest index wins).
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr error;
  std::size_t error_index = n;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(adiawalk_parallel_error)
      if (static_cast<std::size_t>(i) < error_index) {
        error_index = static_cast<std::size_t>(i);
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace adiawalk
