#pragma once

#include <cstddef>

#include "ckrtm/hopf.hpp"
#include "ckrtm/word.hpp"

namespace ckrtm {

/// f̃(u) for a single letter and a forest f ≠ I:
///   •̃(x) = yx, •̃(y) = -yx;
///   t̃(u) = L_y L_{x+2y} L_y^{-1} f̃(u) for t = B₊(f);
///   (gh)~(u) = g̃(h̃(u)), peeling the smallest tree g.
/// Memoized per (forest, letter).
WordSum rtm_letter(const Forest& f, Letter u);

/// f̃(w) with f̃(1) = ε(f)·1 and f̃(uw) = Σ f̃'(u) f̃''(w) over Δ(f).
WordSum rtm_apply(const Forest& f, const Word& w);
WordSum rtm_apply(const Forest& f, const WordSum& w);
WordSum rtm_apply(const ForestSum& f, const WordSum& w);

/// L = L_y L_{x+2y} L_y^{-1}.
WordSum tree_shift(const WordSum& p);

/// F_I = 1, F_• = y, F_{B₊(f)} = L(F_f), F_{gh} = F_g ⋄ F_h.
WordSum f_poly(const Forest& f);
WordSum f_poly(const ForestSum& f);

/// G_I = 1, G_• = -y, G_{B₊(f)} = G_f (2x + y), G_{gh} = G_g ⋄ G_h.
WordSum g_poly(const Forest& f);
WordSum g_poly(const ForestSum& f);

struct SpanRank {
  std::size_t rank;
  std::size_t expected;
};

/// Rank over Q of {F_f : deg f = n} and the dimension 2^{n-1} of the degree-n
/// part of yA.
SpanRank span_rank(std::size_t n);

}  // namespace ckrtm
