#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "bwsd/types.hpp"

namespace bwsd {

/// Runs fn(state, row) for rows 1..rows using `threads` workers pulling
/// rows from a shared counter in increasing order. Each worker owns one
/// state from make_state(); the states are returned for a serial reduction.
/// The first exception thrown by a worker is rethrown after all joined.
template <class MakeState, class RowFn>
auto run_parallel(doc_t rows, unsigned threads, MakeState&& make_state,
                  RowFn&& fn) {
  using State = decltype(make_state());
  if (threads == 0) threads = 1;
  std::vector<State> states;
  states.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) states.push_back(make_state());

  if (threads == 1) {
    for (doc_t row = 1; row <= rows; ++row) fn(states[0], row);
    return states;
  }

  std::atomic<doc_t> next{1};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](State& state) {
    try {
      for (;;) {
        doc_t row = next.fetch_add(1, std::memory_order_relaxed);
        if (row > rows) break;
        fn(state, row);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(rows + 1);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(worker, std::ref(states[w]));
    }
  }
  if (error) std::rethrow_exception(error);
  return states;
}

}  // namespace bwsd
