#pragma once
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace upho {

// runs f(i) for i in [0, n) on up to `jobs` threads; results keep index order
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int jobs, F&& f) {
  std::vector<std::optional<R>> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i].emplace(f(i));
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  const std::size_t t = std::min<std::size_t>(n, jobs > 1 ? static_cast<std::size_t>(jobs) : 1);
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<R> res;
  res.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (err[i]) std::rethrow_exception(err[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

}  // namespace upho
