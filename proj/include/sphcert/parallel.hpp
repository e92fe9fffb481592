#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace sphcert {

/// Evaluates fn(0..n-1) on up to `workers` threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t n, unsigned workers, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> out;
  out.reserve(n);
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  for (unsigned w = 0; w < used; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += used) slots[i].emplace(fn(i));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace sphcert
