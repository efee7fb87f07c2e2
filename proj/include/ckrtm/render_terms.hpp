#pragma once

#include <string>

#include "ckrtm/lincomb.hpp"

namespace ckrtm::detail {

/// "a - 2 b + 1/3 c"; coefficient ±1 is elided, zero renders as "0".
template <class Key, class Label>
std::string render_terms(const LinearCombination<Key>& s, Label&& label) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : s) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string text = label(key);
    if (mag != 1 || text.empty()) {
      out += mag.get_str();
      if (!text.empty()) out += " ";
    }
    out += text;
  }
  return out;
}

}  // namespace ckrtm::detail
