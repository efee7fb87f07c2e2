#pragma once

namespace ckrtm::faults {

/// Deliberate sign corruptions used by the mutation-sanity suite to show that
/// the identity checks actually detect transcription errors.
enum class Fault {
  none,
  diamond_xx_sign,  // xw1 ⋄ xw2 merge term flips from minus to plus
  g_dot_sign,       // G_• = +y instead of -y
};

Fault active() noexcept;

/// Activates a fault for the guard's lifetime. Clears all caches on entry and
/// exit so no corrupted value outlives the guard. Not for concurrent use.
class ScopedFault {
 public:
  explicit ScopedFault(Fault fault);
  ~ScopedFault();
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

}  // namespace ckrtm::faults
