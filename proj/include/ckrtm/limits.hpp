#pragma once

#include <cstddef>
#include <string_view>

namespace ckrtm {

inline constexpr std::size_t kDefaultMaxDegree = 8;

std::size_t max_degree() noexcept;
void set_max_degree(std::size_t cap) noexcept;

/// Throws ResourceLimitError when `degree` exceeds the current cap.
void require_degree(std::size_t degree, std::string_view what);

}  // namespace ckrtm
