#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ckrtm {

/// Every identity the library can check exhaustively on bounded degrees.
enum class Identity {
  // Hopf algebra of forests
  coassociativity,
  antipode_axioms,
  coproduct_oracle,
  // word algebra / harmonic products
  star_laws,
  harub_laws,
  diamond_laws,
  diamond_z_linear,
  harmonic_alternating_sum,
  d_transport,
  phi_transport,
  diamond_letter_y,
  u_multiplicative,
  u_recursion,
  pq_closed_forms,
  m_kills_u,
  op_eq3,
  // rooted tree maps
  thm1,
  thm2,
  cor,
  thm3,
  lem_z,
  prop_key,
  lem_pq,
  prop_B,
  prop_FG0,
  prop_FS,
  lem_tau,
  factor_order,
  rtm_image,
  span_rank,
};

/// Negative fields mean "use the identity's default".
struct Bounds {
  int forest_degree = -1;
  int word_length = -1;
  int random_cases = -1;
  std::uint64_t seed = 0x5eed'2021ULL;
  unsigned jobs = 1;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::string identity;
  /// Resolved bounds actually swept, in a fixed order.
  std::vector<std::pair<std::string, long long>> bounds;
  bool passed = false;
  /// First failing case in sweep order.
  std::optional<Fields> counterexample;
  std::size_t checked = 0;
  long long millis = 0;
};

struct IdentityInfo {
  Identity id;
  std::string_view name;
  std::string_view summary;
  bool uses_forests;
  bool uses_words;
  bool uses_random;
  int default_forest_degree;
  int default_word_length;
  int default_random_cases;
};

const std::vector<IdentityInfo>& identities();
const IdentityInfo& identity_info(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

/// Sweeps the identity over its bounded domain with exact arithmetic. Throws
/// ResourceLimitError when a bound exceeds the configured degree cap.
VerificationReport verify_identity(Identity id, const Bounds& bounds = {});

}  // namespace ckrtm
