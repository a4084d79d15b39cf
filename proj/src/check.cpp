#include "hv/check.hpp"

#include <atomic>

#include "hv/errors.hpp"

namespace hv {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) { g_threads = n; }

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::vector<BasisKey> window_basis(const Window& w, bool with_centrals) {
  if (w.n_max < 1) throw InvalidArgument("window N must be at least 1");
  std::vector<BasisKey> out;
  if (with_centrals) {
    out.push_back(BasisKey::C1());
    out.push_back(BasisKey::C2());
    out.push_back(BasisKey::C3());
  }
  for (std::int64_t n = -w.n_max; n <= w.n_max; ++n) out.push_back(BasisKey::I(n));
  for (std::int64_t n = -w.n_max; n <= w.n_max; ++n) out.push_back(BasisKey::L(n));
  return out;
}

std::vector<BasisKey> window_core(const Window& w) { return window_basis(w, false); }

std::vector<std::vector<BasisKey>> ordered_tuples(const std::vector<BasisKey>& keys, int k) {
  std::vector<std::vector<BasisKey>> out{{}};
  for (int depth = 0; depth < k; ++depth) {
    std::vector<std::vector<BasisKey>> next;
    next.reserve(out.size() * keys.size());
    for (const auto& prefix : out) {
      for (const auto& key : keys) {
        auto t = prefix;
        t.push_back(key);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace hv
