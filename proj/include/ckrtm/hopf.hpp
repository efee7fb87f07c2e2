#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "ckrtm/forest.hpp"
#include "ckrtm/lincomb.hpp"

namespace ckrtm {

/// Element of the Connes–Kreimer Hopf algebra H.
using ForestSum = LinearCombination<Forest>;
/// Element of H ⊗ H; the pair is (left, right) Sweedler components.
using ForestPair = std::pair<Forest, Forest>;
using ForestTensorSum = LinearCombination<ForestPair>;

ForestSum multiply(const ForestSum& a, const ForestSum& b);
/// Componentwise product on H ⊗ H.
ForestTensorSum multiply(const ForestTensorSum& a, const ForestTensorSum& b);

Rational counit(const Forest& f);
Rational counit(const ForestSum& s);

/// Δ(t) = I ⊗ t + (B₊ ⊗ id) Δ(B₋ t), Δ(gh) = Δ(g)Δ(h). Memoized per tree.
ForestTensorSum coproduct(const Forest& f);
ForestTensorSum coproduct(const ForestSum& s);

/// Δ(t) = I ⊗ t + Σ_{t' ⊂ t} t' ⊗ (t ∖ t') by brute force over connected
/// vertex subsets containing the root of a labelled copy of t. Independent
/// of `coproduct`.
ForestTensorSum coproduct_oracle(const Tree& t);

/// S(t) = -t - Σ_{I ≠ t' ⊊ t} t' S(t ∖ t'), S multiplicative, S(I) = I.
ForestSum antipode(const Forest& f);
ForestSum antipode(const ForestSum& s);

/// (Δ ⊗ id) and (id ⊗ Δ) applied to a tensor; used by the coassociativity check.
LinearCombination<std::tuple<Forest, Forest, Forest>> coproduct_left(const ForestTensorSum& t);
LinearCombination<std::tuple<Forest, Forest, Forest>> coproduct_right(const ForestTensorSum& t);

/// m ∘ (S ⊗ id) and m ∘ (id ⊗ S).
ForestSum antipode_left_convolution(const ForestTensorSum& t);
ForestSum antipode_right_convolution(const ForestTensorSum& t);

std::string render(const ForestSum& s);
std::string render(const ForestTensorSum& s);

}  // namespace ckrtm
