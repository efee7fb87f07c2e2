#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckrtm/word.hpp"

namespace ckrtm {

/// Block (composition) view of a word of A¹: yx^{k₁-1}⋯yx^{k_r-1} ↔ (k₁,…,k_r).
/// The empty composition is the word 1.
class BlockView {
 public:
  BlockView() = default;
  /// Each part must be >= 1; throws PreconditionError otherwise.
  explicit BlockView(std::vector<int> blocks);
  /// DomainError when w is not in A¹.
  static BlockView of(const Word& w);

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  std::size_t depth() const noexcept { return blocks_.size(); }
  int weight() const noexcept;
  Word word() const;

  friend bool operator==(const BlockView&, const BlockView&) = default;

 private:
  std::vector<int> blocks_;
};

/// yx^{k-1}.
Word block_word(int k);

/// Harmonic product on A¹.
WordSum star(const WordSum& a, const WordSum& b);
/// ⊛: the harmonic recursion with the merged block negated.
WordSum harub(const WordSum& a, const WordSum& b);
/// ⋄ on all of A by the four-case letter recursion.
WordSum diamond(const WordSum& a, const WordSum& b);

using WordPair = std::pair<Word, Word>;
/// Element of A¹ ⊗ A¹ with componentwise harmonic product.
using WordTensorSum = LinearCombination<WordPair>;

/// u(1) = 1⊗1; u(yx^{k₁-1}⋯yx^{k_r-1}) = Σ_i (-1)^i yx^{k₁-1}⋯yx^{k_i-1} ⊗ yx^{k_r-1}zx^{k_{r-1}-1}⋯zx^{k_{i+1}-1}.
WordTensorSum u_map(const Word& w);
WordTensorSum u_map(const WordSum& p);

/// (a⊗b)∗(c⊗d) = (a∗c)⊗(b∗d).
WordTensorSum tensor_star(const WordTensorSum& a, const WordTensorSum& b);

/// M(a⊗b) = a∗b.
WordSum m_contract(const WordTensorSum& t);

/// L'_a(w₁⊗w₂) = yx^{a-1}w₁ ⊗ w₂.
WordTensorSum left_shift(int a, const WordTensorSum& t);

/// Tensor built from two polynomials: Σ c_a c_b a⊗b.
WordTensorSum tensor(const WordSum& a, const WordSum& b);

enum class PQ { p, q };

/// Closed forms on a single generator u_w, w ∈ yA with blocks (k₁,…,k_r):
/// p(u_w) = u(yx^{k₁}yx^{k₂-1}⋯), q(u_w) = -u(y·w).
WordTensorSum pq_of_u(PQ which, const Word& w);

/// The defining formulas on u_w:
/// p(u_w) = Σ_{u' ∉ Q} yx L_y^{-1}(u') ⊗ u'' + 1 ⊗ dρ(w)x,
/// q(u_w) = Σ y u' ⊗ u'' - 1 ⊗ dρ(w)z.
WordTensorSum pq_definitional(PQ which, const Word& w);

/// The same rules applied term by term to an arbitrary tensor presentation:
/// p(a⊗b) = yx L_y^{-1}(a) ⊗ b for a ∈ yA and 1 ⊗ bx for a = 1;
/// q(a⊗b) = ya ⊗ b, minus 1 ⊗ bz when a = 1.
WordTensorSum pq_termwise(PQ which, const WordTensorSum& t);

/// Degree-n slice of B: span{u(v) : v ∈ A¹ of degree n}. Returns the
/// coordinates of `t` in that spanning set (ordered as a1_words(n)) or
/// nullopt when t ∉ B. PreconditionError for non-homogeneous input.
std::optional<std::vector<Rational>> b_coordinates(const WordTensorSum& t, std::size_t n);
bool b_membership(const WordTensorSum& t, std::size_t n);

std::string render(const WordTensorSum& t);

}  // namespace ckrtm
