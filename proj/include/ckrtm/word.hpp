#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckrtm/lincomb.hpp"

namespace ckrtm {

enum class Letter : char { x = 'x', y = 'y' };

/// Word over {x, y}; the empty word is the unit 1 of A = Q<x,y>.
/// Ordered by (length, lexicographic with x < y).
class Word {
 public:
  Word() = default;
  /// Throws DomainError for letters outside {x, y}.
  explicit Word(std::string letters);
  Word(Letter l) : letters_(1, static_cast<char>(l)) {}  // NOLINT: a letter is a word

  const std::string& letters() const noexcept { return letters_; }
  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(letters_[i]); }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[letters_.size() - 1]; }
  Word substr(std::size_t pos, std::size_t count = std::string::npos) const;

  friend Word operator+(const Word& a, const Word& b) { return Word(Raw{}, a.letters_ + b.letters_); }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Raw {};
  Word(Raw, std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

Word operator""_w(const char* s, std::size_t n);

/// Element of A = Q<x,y>.
using WordSum = LinearCombination<Word>;

WordSum letter_x();
WordSum letter_y();
/// z = x + y.
WordSum letter_z();
WordSum unit_word();

/// Letters of the word or "1" for the empty word.
std::string render(const Word& w);
/// Terms sorted by (degree, lexicographic x < y): "yxx + 2 yyx", zero is "0".
std::string render(const WordSum& p);

/// Sum of terms "[±][p/q] letters" with letters over {x, y, z}; z = x + y.
/// A coefficient with no letters is a multiple of 1. Throws ParseError.
WordSum parse_word(std::string_view text);

WordSum concat(const WordSum& a, const WordSum& b);
/// L_u(p) = u p.
WordSum left_mul(const WordSum& u, const WordSum& p);
/// R_u(p) = p u.
WordSum right_mul(const WordSum& p, const WordSum& u);
/// L_y^{-1}; DomainError naming the first word outside yA.
WordSum left_div_y(const WordSum& p);
/// R_x^{-1}; DomainError naming the first word outside Ax.
WordSum right_div_x(const WordSum& p);

bool in_A1(const Word& w) noexcept;
bool in_yA(const Word& w) noexcept;
bool in_Ax(const Word& w) noexcept;
bool in_yAx(const Word& w) noexcept;
bool in_A1(const WordSum& p) noexcept;
bool in_yA(const WordSum& p) noexcept;
bool in_yAx(const WordSum& p) noexcept;

enum class EndoMap { tau, phi, sigma, reverse, d1, d, rho };

std::optional<EndoMap> endo_map_from_name(std::string_view name);
std::string_view endo_map_name(EndoMap m) noexcept;

/// τ: anti-automorphism swapping x and y.
WordSum tau(const WordSum& p);
/// φ: automorphism x ↦ x + y, y ↦ -y.
WordSum phi(const WordSum& p);
/// σ: automorphism x ↦ x, y ↦ -y.
WordSum sigma(const WordSum& p);
/// ε: anti-automorphism fixing both letters (word reversal).
WordSum reverse(const WordSum& p);
/// d₁: automorphism x ↦ x, y ↦ x + y.
WordSum d1(const WordSum& p);
/// d on A¹: d(1) = 1, d(yw) = y d₁(w). DomainError outside Q + yA.
WordSum d(const WordSum& p);
/// ρ on A¹: ρ(1) = 1, ρ = L_y ε L_y^{-1}. DomainError outside Q + yA.
WordSum rho(const WordSum& p);

WordSum endo_map(EndoMap m, const WordSum& p);

/// All 2^n words of length n, sorted.
std::vector<Word> words_of_length(std::size_t n);
/// All words of length <= n, sorted.
std::vector<Word> words_up_to(std::size_t n);
/// Words of A¹ of degree n: {1} for n = 0, otherwise y followed by any n-1 letters.
std::vector<Word> a1_words(std::size_t n);

}  // namespace ckrtm
