#include "ckrtm/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ckrtm/error.hpp"
#include "ckrtm/render_terms.hpp"

namespace ckrtm {

namespace {

// Extends letter images multiplicatively; `anti` reverses the factor order.
WordSum substitute(const WordSum& p, const WordSum& x_image, const WordSum& y_image, bool anti) {
  return extend_linearly<Word>(p, [&](const Word& w) {
    WordSum acc = unit_word();
    for (std::size_t i = 0; i < w.degree(); ++i) {
      const WordSum& img = w[i] == Letter::x ? x_image : y_image;
      acc = anti ? concat(img, acc) : concat(acc, img);
    }
    return acc;
  });
}

[[noreturn]] void outside(std::string_view map, std::string_view space, const Word& w) {
  throw DomainError(std::string(map) + ": word " + render(w) + " is not in " + std::string(space));
}

constexpr std::array<std::pair<std::string_view, EndoMap>, 7> kEndoNames{{
    {"tau", EndoMap::tau},
    {"phi", EndoMap::phi},
    {"sigma", EndoMap::sigma},
    {"reverse", EndoMap::reverse},
    {"d1", EndoMap::d1},
    {"d", EndoMap::d},
    {"rho", EndoMap::rho},
}};

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != 'x' && letters_[i] != 'y') {
      throw DomainError("illegal letter '" + std::string(1, letters_[i]) + "' in word");
    }
  }
}

Word Word::substr(std::size_t pos, std::size_t count) const { return Word(Raw{}, letters_.substr(pos, count)); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_.compare(b.letters_) <=> 0;
}

Word operator""_w(const char* s, std::size_t n) { return Word(std::string(s, n)); }

WordSum letter_x() { return WordSum(Word(Letter::x)); }
WordSum letter_y() { return WordSum(Word(Letter::y)); }
WordSum letter_z() { return letter_x() + letter_y(); }
WordSum unit_word() { return WordSum(Word()); }

std::string render(const Word& w) { return w.empty() ? "1" : w.letters(); }

std::string render(const WordSum& p) {
  return detail::render_terms(p, [](const Word& w) { return w.letters(); });
}

WordSum parse_word(std::string_view text) {
  WordSum out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial", i);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    Rational coeff = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') coeff = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    std::size_t term_start = i;
    bool has_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      try {
        coeff *= parse_rational(text.substr(start, i - start));
      } catch (const ParseError& e) {
        throw ParseError("malformed coefficient", start + e.offset());
      }
      has_number = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    WordSum term = unit_word();
    bool has_letters = false;
    while (i < text.size() && (text[i] == 'x' || text[i] == 'y' || text[i] == 'z')) {
      term = concat(term, text[i] == 'x' ? letter_x() : text[i] == 'y' ? letter_y() : letter_z());
      has_letters = true;
      ++i;
    }
    if (!has_number && !has_letters) {
      throw ParseError(i < text.size() ? "illegal character" : "missing term", i == text.size() ? term_start : i);
    }
    out.add_scaled(term, coeff);
    skip_ws();
    if (i < text.size() && text[i] != '+' && text[i] != '-') throw ParseError("illegal character", i);
  }
  return out;
}

WordSum concat(const WordSum& a, const WordSum& b) {
  return extend_bilinearly<Word>(a, b, [](const Word& u, const Word& v) { return WordSum(u + v); });
}

WordSum left_mul(const WordSum& u, const WordSum& p) { return concat(u, p); }
WordSum right_mul(const WordSum& p, const WordSum& u) { return concat(p, u); }

WordSum left_div_y(const WordSum& p) {
  WordSum out;
  for (const auto& [w, c] : p) {
    if (!in_yA(w)) outside("left_div_y", "yA", w);
    out.add(w.substr(1), c);
  }
  return out;
}

WordSum right_div_x(const WordSum& p) {
  WordSum out;
  for (const auto& [w, c] : p) {
    if (!in_Ax(w)) outside("right_div_x", "Ax", w);
    out.add(w.substr(0, w.degree() - 1), c);
  }
  return out;
}

bool in_A1(const Word& w) noexcept { return w.empty() || w.front() == Letter::y; }
bool in_yA(const Word& w) noexcept { return !w.empty() && w.front() == Letter::y; }
bool in_Ax(const Word& w) noexcept { return !w.empty() && w.back() == Letter::x; }
bool in_yAx(const Word& w) noexcept { return in_yA(w) && w.back() == Letter::x; }

bool in_A1(const WordSum& p) noexcept {
  return std::all_of(p.begin(), p.end(), [](const auto& t) { return in_A1(t.first); });
}
bool in_yA(const WordSum& p) noexcept {
  return std::all_of(p.begin(), p.end(), [](const auto& t) { return in_yA(t.first); });
}
bool in_yAx(const WordSum& p) noexcept {
  return std::all_of(p.begin(), p.end(), [](const auto& t) { return in_yAx(t.first); });
}

std::optional<EndoMap> endo_map_from_name(std::string_view name) {
  for (const auto& [n, m] : kEndoNames) {
    if (n == name) return m;
  }
  if (name == "epsilon") return EndoMap::reverse;
  return std::nullopt;
}

std::string_view endo_map_name(EndoMap m) noexcept {
  for (const auto& [n, mm] : kEndoNames) {
    if (mm == m) return n;
  }
  return "?";
}

WordSum tau(const WordSum& p) { return substitute(p, letter_y(), letter_x(), true); }
WordSum phi(const WordSum& p) { return substitute(p, letter_z(), -letter_y(), false); }
WordSum sigma(const WordSum& p) { return substitute(p, letter_x(), -letter_y(), false); }
WordSum reverse(const WordSum& p) { return substitute(p, letter_x(), letter_y(), true); }
WordSum d1(const WordSum& p) { return substitute(p, letter_x(), letter_z(), false); }

WordSum d(const WordSum& p) {
  return extend_linearly<Word>(p, [](const Word& w) {
    if (w.empty()) return unit_word();
    if (!in_yA(w)) outside("d", "Q + yA", w);
    return concat(letter_y(), d1(WordSum(w.substr(1))));
  });
}

WordSum rho(const WordSum& p) {
  return extend_linearly<Word>(p, [](const Word& w) {
    if (w.empty()) return unit_word();
    if (!in_yA(w)) outside("rho", "Q + yA", w);
    std::string rest = w.letters().substr(1);
    std::reverse(rest.begin(), rest.end());
    return WordSum(Word("y" + rest));
  });
}

WordSum endo_map(EndoMap m, const WordSum& p) {
  switch (m) {
    case EndoMap::tau: return tau(p);
    case EndoMap::phi: return phi(p);
    case EndoMap::sigma: return sigma(p);
    case EndoMap::reverse: return reverse(p);
    case EndoMap::d1: return d1(p);
    case EndoMap::d: return d(p);
    case EndoMap::rho: return rho(p);
  }
  throw InternalError("unknown endo map");
}

std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << n;
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::string s(n, 'x');
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> (n - 1 - i) & 1U) s[i] = 'y';
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = words_of_length(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Word> a1_words(std::size_t n) {
  if (n == 0) return {Word()};
  std::vector<Word> out;
  for (const auto& w : words_of_length(n - 1)) out.push_back(Word(Letter::y) + w);
  return out;
}

}  // namespace ckrtm
