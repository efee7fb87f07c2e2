#include "ckrtm/faults.hpp"

#include <atomic>

#include "ckrtm/memo.hpp"

namespace ckrtm::faults {

namespace {
std::atomic<Fault> g_fault{Fault::none};
}

Fault active() noexcept { return g_fault.load(std::memory_order_relaxed); }

ScopedFault::ScopedFault(Fault fault) : previous_(g_fault.exchange(fault)) { clear_all_caches(); }

ScopedFault::~ScopedFault() {
  g_fault.store(previous_);
  clear_all_caches();
}

}  // namespace ckrtm::faults
