#ifndef SGLAB_WORK_QUEUE_HPP
#define SGLAB_WORK_QUEUE_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sglab {

// Runs work(i) for i in [0, n) on `width` threads. Items are claimed in
// index order; callers write results into slot i, so the output order does
// not depend on scheduling. The first exception (by item index) is
// rethrown after all threads finish.
template <class Work>
void run_work_queue(std::size_t n, std::size_t width, Work&& work) {
  if (width <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < width && t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sglab

#endif
