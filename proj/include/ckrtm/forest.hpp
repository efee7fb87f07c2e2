#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ckrtm {

class Forest;

/// Unordered rooted tree stored as its canonical bracket code: a vertex is
/// "[" + children + "]" with children sorted by (length, lexicographic).
/// Equality of trees is equality of codes.
class Tree {
 public:
  /// The single vertex •.
  Tree();

  /// B₊: grafts every root of `f` onto a new common root.
  static Tree graft(const Forest& f);

  /// Wraps an already canonical code; only for trusted internal callers.
  static Tree from_canonical(std::string code);

  const std::string& code() const noexcept { return code_; }
  std::size_t degree() const noexcept { return code_.size() / 2; }

  /// B₋: the unique forest f with graft(f) == *this.
  Forest children() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  explicit Tree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// Multiset of trees; the empty forest is the unit I. Stored as the
/// concatenation of its sorted tree codes, which decodes uniquely.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  Forest(const Tree& tree) : code_(tree.code()) {}  // NOLINT: a tree is a forest

  const std::string& code() const noexcept { return code_; }
  std::size_t degree() const noexcept { return code_.size() / 2; }
  bool is_unit() const noexcept { return code_.empty(); }
  bool is_tree() const;

  std::vector<Tree> trees() const;

  /// Commutative product: multiset union.
  friend Forest operator*(const Forest& a, const Forest& b);

  friend bool operator==(const Forest&, const Forest&) = default;
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::string code_;
};

/// Canonical bracket text; the empty forest renders as "" (see render_forest_label).
std::string render(const Forest& f);
/// Like render, but the unit forest shows as "I".
std::string render_forest_label(const Forest& f);

/// forest := tree* ; tree := '[' forest ']' ; whitespace ignored. The single
/// token "I" is accepted for the empty forest.
Forest parse_forest(std::string_view text);
Tree parse_tree(std::string_view text);

/// All forests of total degree n, sorted, without duplicates.
const std::vector<Forest>& enumerate_forests(std::size_t n);
/// All trees with n vertices, sorted.
const std::vector<Tree>& enumerate_trees(std::size_t n);

inline Tree b_plus(const Forest& f) { return Tree::graft(f); }
inline Forest b_minus(const Tree& t) { return t.children(); }

/// Some named shapes used throughout tests and docs.
Tree ladder(std::size_t n);
Tree corolla(std::size_t leaves);

}  // namespace ckrtm
