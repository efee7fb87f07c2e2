#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ckrtm/lincomb.hpp"

namespace ckrtm {

/// Incremental Gaussian elimination over Q on sparse vectors. Each stored row
/// has its smallest key as pivot with coefficient 1 and remembers which
/// combination of the added generators produced it.
template <class Key>
class SparseEliminator {
 public:
  using Vector = LinearCombination<Key>;

  /// Returns true when `v` was independent of the generators added so far.
  bool add(const Vector& v) {
    const std::size_t index = generators_++;
    Combo combo;
    combo.add(index, 1);
    Vector residual = reduce(v, combo);
    if (residual.is_zero()) return false;
    const auto& [pivot, lead] = *residual.begin();
    Rational inv = 1 / lead;
    Key key = pivot;
    residual *= inv;
    combo *= inv;
    rows_.emplace(std::move(key), Row{std::move(residual), std::move(combo)});
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t generators() const noexcept { return generators_; }

  bool contains(const Vector& v) const {
    Combo scratch;
    return reduce(v, scratch).is_zero();
  }

  /// Coefficients c_g with v = Σ c_g generator_g, or nullopt if v is outside
  /// the span. Dependent generators receive coefficient zero.
  std::optional<std::vector<Rational>> coordinates(const Vector& v) const {
    Combo combo;
    if (!reduce(v, combo).is_zero()) return std::nullopt;
    std::vector<Rational> out(generators_);
    for (const auto& [g, c] : combo) out[g] = -c;
    return out;
  }

 private:
  using Combo = LinearCombination<std::size_t>;
  struct Row {
    Vector vec;
    Combo combo;
  };

  // Subtracts stored rows in ascending pivot order; `combo` tracks the same
  // subtractions on generator coordinates.
  Vector reduce(Vector v, Combo& combo) const {
    for (const auto& [pivot, row] : rows_) {
      Rational c = v.coefficient(pivot);
      if (c == 0) continue;
      v.add_scaled(row.vec, -c);
      combo.add_scaled(row.combo, -c);
    }
    return v;
  }

  std::map<Key, Row> rows_;
  std::size_t generators_ = 0;
};

}  // namespace ckrtm
