#pragma once

// Deterministic work splitting for the detectors' outer loops. Results never
// depend on the worker count: first_hit returns the lowest-index hit and
// min_reduce breaks ties by index.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace tucker::detail {

inline int effective_workers(int requested, std::size_t count) {
  if (requested <= 1 || count < 2) return 1;
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(requested), count));
}

// Runs body(worker_index) on `workers` threads, rethrowing the first exception.
template <class Body>
void run_workers(int workers, Body&& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// make_state() builds per-worker scratch; fn(state, i) -> std::optional<T>.
// Returns the hit with the smallest index, exactly as a sequential scan.
template <class T, class MakeState, class Fn>
std::optional<T> first_hit(std::size_t count, int workers, MakeState&& make_state, Fn&& fn) {
  workers = effective_workers(workers, count);
  if (workers == 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) {
      if (auto hit = fn(state, i)) return hit;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::vector<std::pair<std::size_t, std::optional<T>>> local(static_cast<std::size_t>(workers), {count, std::nullopt});
  run_workers(workers, [&](int w) {
    auto state = make_state();
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) break;
      if (auto hit = fn(state, i)) {
        auto& slot = local[static_cast<std::size_t>(w)];
        if (i < slot.first) slot = {i, std::move(hit)};
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  });
  std::optional<T> result;
  std::size_t result_index = count;
  for (auto& [i, hit] : local) {
    if (hit && i < result_index) {
      result_index = i;
      result = std::move(hit);
    }
  }
  return result;
}

// Visits every index; keeps the minimum under `less`, ties to the smaller
// index. fn(state, i, const std::optional<T>& local_best) -> std::optional<T>
// lets the body prune against the worker's current best.
template <class T, class MakeState, class Fn, class Less>
std::optional<T> min_reduce(std::size_t count, int workers, MakeState&& make_state, Fn&& fn, Less&& less) {
  workers = effective_workers(workers, count);
  std::vector<std::pair<std::size_t, std::optional<T>>> local(static_cast<std::size_t>(workers), {count, std::nullopt});
  std::atomic<std::size_t> next{0};
  run_workers(workers, [&](int w) {
    auto state = make_state();
    auto& slot = local[static_cast<std::size_t>(w)];
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      auto candidate = fn(state, i, slot.second);
      if (candidate && (!slot.second || less(*candidate, *slot.second))) slot = {i, std::move(candidate)};
    }
  });
  std::optional<T> result;
  std::size_t result_index = count;
  for (auto& [i, value] : local) {
    if (!value) continue;
    if (!result || less(*value, *result) || (!less(*result, *value) && i < result_index)) {
      result = std::move(value);
      result_index = i;
    }
  }
  return result;
}

// Calls fn(state, i) for every index.
template <class MakeState, class Fn>
void for_each_index(std::size_t count, int workers, MakeState&& make_state, Fn&& fn) {
  workers = effective_workers(workers, count);
  std::atomic<std::size_t> next{0};
  run_workers(workers, [&](int) {
    auto state = make_state();
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(state, i);
    }
  });
}

}  // namespace tucker::detail
