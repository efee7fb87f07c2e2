#pragma once

#include <functional>
#include <map>
#include <utility>

#include "ckrtm/rational.hpp"

namespace ckrtm {

/// Finite Q-linear combination of basis elements `Key`. Zero coefficients are
/// never stored, so two combinations are equal iff their maps are equal.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coeff = 1) { add(std::move(key), coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  /// Adds `scale * other` in place.
  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) = default;

 private:
  map_type terms_;
};

/// Extends `fn : Key -> LinearCombination<Out>` linearly.
template <class Out, class Key, class Fn>
LinearCombination<Out> extend_linearly(const LinearCombination<Key>& in, Fn&& fn) {
  LinearCombination<Out> out;
  for (const auto& [k, c] : in) out.add_scaled(std::invoke(fn, k), c);
  return out;
}

/// Extends `fn : (KeyA, KeyB) -> LinearCombination<Out>` bilinearly.
template <class Out, class KeyA, class KeyB, class Fn>
LinearCombination<Out> extend_bilinearly(const LinearCombination<KeyA>& a,
                                         const LinearCombination<KeyB>& b, Fn&& fn) {
  LinearCombination<Out> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add_scaled(std::invoke(fn, ka, kb), ca * cb);
  }
  return out;
}

}  // namespace ckrtm
