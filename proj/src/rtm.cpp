#include "ckrtm/rtm.hpp"

#include "ckrtm/error.hpp"
#include "ckrtm/faults.hpp"
#include "ckrtm/harmonic.hpp"
#include "ckrtm/limits.hpp"
#include "ckrtm/linalg.hpp"
#include "ckrtm/memo.hpp"

namespace ckrtm {

namespace {

MemoTable<std::pair<Forest, Letter>, WordSum> g_letter_cache;
MemoTable<std::pair<Forest, Word>, WordSum> g_apply_cache;
MemoTable<Forest, WordSum> g_f_cache;
MemoTable<Forest, WordSum> g_g_cache;

WordSum checked_tree_shift(const WordSum& p, const Forest& f) {
  if (!in_yA(p)) {
    throw InternalError("rtm_letter: intermediate value for " + render_forest_label(f) + " left yA: " + render(p));
  }
  return tree_shift(p);
}

WordSum compute_letter(const Forest& f, Letter u) {
  const auto trees = f.trees();
  if (trees.size() > 1) {
    const Forest rest(std::vector<Tree>(trees.begin() + 1, trees.end()));
    return rtm_apply(rest, rtm_letter(trees.front(), u));
  }
  const Forest inner = trees.front().children();
  if (inner.is_unit()) {
    WordSum yx("yx"_w);
    return u == Letter::x ? yx : -yx;
  }
  return checked_tree_shift(rtm_letter(inner, u), f);
}

// Folds ⋄ over the trees of f with a per-tree rule.
template <class TreeRule>
WordSum fold_diamond(const Forest& f, TreeRule&& rule) {
  WordSum acc = unit_word();
  for (const auto& t : f.trees()) acc = diamond(acc, rule(t));
  return acc;
}

}  // namespace

WordSum tree_shift(const WordSum& p) {
  static const WordSum x_plus_2y = parse_word("x + 2y");
  return left_mul(letter_y(), left_mul(x_plus_2y, left_div_y(p)));
}

WordSum rtm_letter(const Forest& f, Letter u) {
  if (f.is_unit()) throw PreconditionError("rtm_letter: the empty forest acts as the identity");
  return g_letter_cache.get_or_compute({f, u}, [&] { return compute_letter(f, u); });
}

WordSum rtm_apply(const Forest& f, const Word& w) {
  if (f.is_unit()) return WordSum(w);
  if (w.empty()) return WordSum();
  return g_apply_cache.get_or_compute({f, w}, [&] {
    const Word head = w.substr(0, 1);
    const Word tail = w.substr(1);
    WordSum out;
    for (const auto& [pair, c] : coproduct(f)) {
      const auto& [left, right] = pair;
      WordSum first = left.is_unit() ? WordSum(head) : rtm_letter(left, head.front());
      out.add_scaled(concat(first, rtm_apply(right, tail)), c);
    }
    return out;
  });
}

WordSum rtm_apply(const Forest& f, const WordSum& w) {
  return extend_linearly<Word>(w, [&](const Word& v) { return rtm_apply(f, v); });
}

WordSum rtm_apply(const ForestSum& f, const WordSum& w) {
  WordSum out;
  for (const auto& [forest, c] : f) out.add_scaled(rtm_apply(forest, w), c);
  return out;
}

WordSum f_poly(const Forest& f) {
  if (f.is_unit()) return unit_word();
  return g_f_cache.get_or_compute(f, [&] {
    if (!f.is_tree()) return fold_diamond(f, [](const Tree& t) { return f_poly(Forest(t)); });
    const Forest inner = f.trees().front().children();
    if (inner.is_unit()) return letter_y();
    return tree_shift(f_poly(inner));
  });
}

WordSum f_poly(const ForestSum& f) {
  return extend_linearly<Word>(f, [](const Forest& g) { return f_poly(g); });
}

WordSum g_poly(const Forest& f) {
  if (f.is_unit()) return unit_word();
  return g_g_cache.get_or_compute(f, [&] {
    if (!f.is_tree()) return fold_diamond(f, [](const Tree& t) { return g_poly(Forest(t)); });
    const Forest inner = f.trees().front().children();
    if (inner.is_unit()) {
      return faults::active() == faults::Fault::g_dot_sign ? letter_y() : -letter_y();
    }
    static const WordSum two_x_plus_y = parse_word("2x + y");
    return right_mul(g_poly(inner), two_x_plus_y);
  });
}

WordSum g_poly(const ForestSum& f) {
  return extend_linearly<Word>(f, [](const Forest& g) { return g_poly(g); });
}

SpanRank span_rank(std::size_t n) {
  if (n == 0) throw PreconditionError("span_rank: degree must be positive");
  SparseEliminator<Word> span;
  for (const auto& f : enumerate_forests(n)) span.add(f_poly(f));
  return {span.rank(), std::size_t{1} << (n - 1)};
}

}  // namespace ckrtm
