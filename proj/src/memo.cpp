#include "ckrtm/memo.hpp"

#include <atomic>
#include <mutex>
#include <string>
#include <vector>

#include "ckrtm/error.hpp"
#include "ckrtm/limits.hpp"

namespace ckrtm {

namespace {

struct ClearerRegistry {
  std::mutex mutex;
  std::vector<std::function<void()>> clearers;
};

ClearerRegistry& registry() {
  static ClearerRegistry r;
  return r;
}

std::atomic<std::size_t> g_max_degree{kDefaultMaxDegree};

}  // namespace

namespace detail {
void register_cache_clearer(std::function<void()> clear) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.clearers.push_back(std::move(clear));
}
}  // namespace detail

void clear_all_caches() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  for (auto& clear : r.clearers) clear();
}

std::size_t max_degree() noexcept { return g_max_degree.load(); }
void set_max_degree(std::size_t cap) noexcept { g_max_degree.store(cap); }

void require_degree(std::size_t degree, std::string_view what) {
  if (degree > max_degree()) {
    throw ResourceLimitError(std::string(what) + ": degree " + std::to_string(degree) +
                             " exceeds cap " + std::to_string(max_degree()));
  }
}

}  // namespace ckrtm
