#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hv/element.hpp"

namespace hv {

/// Basis window W(N) = {L(n), I(n) : |n| <= N}, plus C1, C2, C3 when the
/// algebra has them.
struct Window {
  std::int64_t n_max = 1;

  bool contains(const BasisKey& k) const {
    return k.is_central_symbol() || (k.index >= -n_max && k.index <= n_max);
  }
};

/// Sorted basis of the window; throws InvalidArgument when N < 1.
std::vector<BasisKey> window_basis(const Window& w, bool with_centrals);
/// Non-central keys only.
std::vector<BasisKey> window_core(const Window& w);

struct Counterexample {
  std::vector<BasisKey> inputs;
  std::string identity;
  Element residual;
};

struct CheckReport {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Counterexample> counterexamples;
};

/// Number of worker threads used by the checkers and row generators; 0
/// selects std::thread::hardware_concurrency(). Results never depend on it.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Evaluates f(i) for i in [0, n) on the worker pool and returns the results
/// in index order.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  unsigned workers = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(f(i));
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += workers) slots[i].emplace(f(i));
      });
    }
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Outcome of checking one input tuple.
struct CaseResult {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Counterexample> failures;
};

/// Runs `check` over every tuple and merges the results in lexicographic
/// order of (inputs, identity).
template <class F>
CheckReport run_checks(const std::vector<std::vector<BasisKey>>& tuples, F&& check) {
  auto results = parallel_map(tuples.size(), [&](std::size_t i) { return check(tuples[i]); });
  CheckReport report;
  for (auto& r : results) {
    report.checked += r.checked;
    report.skipped += r.skipped;
    for (auto& c : r.failures) report.counterexamples.push_back(std::move(c));
  }
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     if (a.inputs != b.inputs) return a.inputs < b.inputs;
                     return a.identity < b.identity;
                   });
  report.passed = report.counterexamples.empty();
  return report;
}

/// All ordered k-tuples over `keys`.
std::vector<std::vector<BasisKey>> ordered_tuples(const std::vector<BasisKey>& keys, int k);

}  // namespace hv
