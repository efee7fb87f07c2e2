#include "ckrtm/harmonic.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ckrtm/error.hpp"
#include "ckrtm/faults.hpp"
#include "ckrtm/linalg.hpp"
#include "ckrtm/memo.hpp"
#include "ckrtm/render_terms.hpp"

namespace ckrtm {

namespace {

MemoTable<std::tuple<Word, Word, int>, WordSum> g_quasi_shuffle;
MemoTable<WordPair, WordSum> g_diamond;

WordSum prepend(const Word& head, const WordSum& tail) {
  WordSum out;
  for (const auto& [w, c] : tail) out.add(head + w, c);
  return out;
}

std::size_t first_block_length(const Word& w) {
  std::size_t i = 1;
  while (i < w.degree() && w[i] == Letter::x) ++i;
  return i;
}

void require_a1(const Word& w, std::string_view op) {
  if (!in_A1(w)) throw DomainError(std::string(op) + ": word " + render(w) + " is not in A^1");
}

// ∗ for merge_sign = +1, ⊛ for merge_sign = -1.
WordSum quasi_shuffle(const Word& a, const Word& b, int merge_sign) {
  if (a.empty()) return WordSum(b);
  if (b.empty()) return WordSum(a);
  return g_quasi_shuffle.get_or_compute({a, b, merge_sign}, [&] {
    const std::size_t ka = first_block_length(a);
    const std::size_t kb = first_block_length(b);
    const Word a_rest = a.substr(ka);
    const Word b_rest = b.substr(kb);
    WordSum out = prepend(a.substr(0, ka), quasi_shuffle(a_rest, b, merge_sign));
    out += prepend(b.substr(0, kb), quasi_shuffle(a, b_rest, merge_sign));
    out.add_scaled(prepend(block_word(static_cast<int>(ka + kb)), quasi_shuffle(a_rest, b_rest, merge_sign)),
                   merge_sign);
    return out;
  });
}

WordSum quasi_shuffle(const WordSum& a, const WordSum& b, int merge_sign, std::string_view op) {
  return extend_bilinearly<Word>(a, b, [&](const Word& u, const Word& v) {
    require_a1(u, op);
    require_a1(v, op);
    return quasi_shuffle(u, v, merge_sign);
  });
}

WordSum diamond_words(const Word& a, const Word& b) {
  if (a.empty()) return WordSum(b);
  if (b.empty()) return WordSum(a);
  return g_diamond.get_or_compute({a, b}, [&] {
    const Word x(Letter::x);
    const Word y(Letter::y);
    const Word a_rest = a.substr(1);
    const Word b_rest = b.substr(1);
    const bool ax = a.front() == Letter::x;
    const bool bx = b.front() == Letter::x;
    WordSum out;
    if (ax && bx) {
      const int sign = faults::active() == faults::Fault::diamond_xx_sign ? 1 : -1;
      out = prepend(x, diamond_words(a_rest, b));
      out.add_scaled(prepend(x, diamond_words(y + a_rest, b_rest)), sign);
    } else if (ax) {
      out = prepend(x, diamond_words(a_rest, b)) + prepend(y, diamond_words(a, b_rest));
    } else if (bx) {
      out = prepend(y, diamond_words(a_rest, b)) + prepend(x, diamond_words(a, b_rest));
    } else {
      out = prepend(y, diamond_words(a_rest, b)) - prepend(y, diamond_words(x + a_rest, b_rest));
    }
    return out;
  });
}

}  // namespace

BlockView::BlockView(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int k : blocks_) {
    if (k < 1) throw PreconditionError("block exponents must be positive");
  }
}

BlockView BlockView::of(const Word& w) {
  require_a1(w, "BlockView");
  std::vector<int> blocks;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (w[i] == Letter::y) {
      blocks.push_back(1);
    } else {
      ++blocks.back();
    }
  }
  return BlockView(std::move(blocks));
}

int BlockView::weight() const noexcept { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

Word BlockView::word() const {
  Word w;
  for (int k : blocks_) w = w + block_word(k);
  return w;
}

Word block_word(int k) { return Word("y" + std::string(static_cast<std::size_t>(k - 1), 'x')); }

WordSum star(const WordSum& a, const WordSum& b) { return quasi_shuffle(a, b, 1, "star"); }

WordSum harub(const WordSum& a, const WordSum& b) { return quasi_shuffle(a, b, -1, "harub"); }

WordSum diamond(const WordSum& a, const WordSum& b) { return extend_bilinearly<Word>(a, b, diamond_words); }

WordTensorSum tensor(const WordSum& a, const WordSum& b) {
  WordTensorSum out;
  for (const auto& [u, c] : a) {
    for (const auto& [v, e] : b) out.add({u, v}, c * e);
  }
  return out;
}

WordTensorSum u_map(const Word& w) {
  const auto blocks = BlockView::of(w).blocks();
  const std::size_t r = blocks.size();
  WordTensorSum out;
  Word left;
  for (std::size_t i = 0; i <= r; ++i) {
    WordSum right = unit_word();
    if (i < r) {
      right = WordSum(block_word(blocks[r - 1]));
      for (std::size_t j = r - 1; j-- > i;) {
        right = concat(concat(right, letter_z()), WordSum(Word(std::string(blocks[j] - 1, 'x'))));
      }
    }
    out.add_scaled(tensor(WordSum(left), right), i % 2 == 0 ? 1 : -1);
    if (i < r) left = left + block_word(blocks[i]);
  }
  return out;
}

WordTensorSum u_map(const WordSum& p) {
  return extend_linearly<WordPair>(p, [](const Word& w) { return u_map(w); });
}

WordTensorSum tensor_star(const WordTensorSum& a, const WordTensorSum& b) {
  return extend_bilinearly<WordPair>(a, b, [](const WordPair& s, const WordPair& t) {
    return tensor(star(WordSum(s.first), WordSum(t.first)), star(WordSum(s.second), WordSum(t.second)));
  });
}

WordSum m_contract(const WordTensorSum& t) {
  WordSum out;
  for (const auto& [pair, c] : t) out.add_scaled(star(WordSum(pair.first), WordSum(pair.second)), c);
  return out;
}

WordTensorSum left_shift(int a, const WordTensorSum& t) {
  const Word head = block_word(a);
  WordTensorSum out;
  for (const auto& [pair, c] : t) out.add({head + pair.first, pair.second}, c);
  return out;
}

WordTensorSum pq_of_u(PQ which, const Word& w) {
  if (!in_yA(w)) throw DomainError("pq_of_u: word " + render(w) + " is not in yA");
  if (which == PQ::p) {
    auto blocks = BlockView::of(w).blocks();
    ++blocks.front();
    return u_map(BlockView(std::move(blocks)).word());
  }
  return -u_map(Word(Letter::y) + w);
}

WordTensorSum pq_definitional(PQ which, const Word& w) {
  if (!in_yA(w)) throw DomainError("pq_definitional: word " + render(w) + " is not in yA");
  const WordTensorSum uw = u_map(w);
  const WordSum drho = d(rho(WordSum(w)));
  WordTensorSum out;
  if (which == PQ::p) {
    const WordSum yx = WordSum("yx"_w);
    for (const auto& [pair, c] : uw) {
      if (pair.first.empty()) continue;
      out.add_scaled(tensor(concat(yx, left_div_y(WordSum(pair.first))), WordSum(pair.second)), c);
    }
    out += tensor(unit_word(), concat(drho, letter_x()));
  } else {
    for (const auto& [pair, c] : uw) out.add({Word(Letter::y) + pair.first, pair.second}, c);
    out -= tensor(unit_word(), concat(drho, letter_z()));
  }
  return out;
}

WordTensorSum pq_termwise(PQ which, const WordTensorSum& t) {
  WordTensorSum out;
  for (const auto& [pair, c] : t) {
    const auto& [a, b] = pair;
    if (which == PQ::p) {
      if (a.empty()) {
        out.add({a, b + Word(Letter::x)}, c);
      } else {
        if (!in_yA(a)) throw DomainError("p: left component " + render(a) + " is not in A^1");
        out.add({"yx"_w + a.substr(1), b}, c);
      }
    } else {
      out.add({Word(Letter::y) + a, b}, c);
      if (a.empty()) out.add_scaled(tensor(unit_word(), concat(WordSum(b), letter_z())), -c);
    }
  }
  return out;
}

std::optional<std::vector<Rational>> b_coordinates(const WordTensorSum& t, std::size_t n) {
  for (const auto& [pair, c] : t) {
    if (pair.first.degree() + pair.second.degree() != n) {
      throw PreconditionError("b_membership: tensor is not homogeneous of degree " + std::to_string(n));
    }
  }
  SparseEliminator<WordPair> basis;
  for (const auto& v : a1_words(n)) basis.add(u_map(v));
  return basis.coordinates(t);
}

bool b_membership(const WordTensorSum& t, std::size_t n) { return b_coordinates(t, n).has_value(); }

std::string render(const WordTensorSum& t) {
  return detail::render_terms(t, [](const WordPair& p) { return render(p.first) + " (x) " + render(p.second); });
}

}  // namespace ckrtm
