#include "ckrtm/mzv.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "ckrtm/error.hpp"
#include "ckrtm/rtm.hpp"

namespace ckrtm::mzv {

namespace {

using Series = std::vector<Real>;

// Integrates the series once more against ω_y = dt/(1-t) or ω_x = dt/t.
void integrate(Series& c, Letter letter) {
  const std::size_t n = c.size();
  if (letter == Letter::y) {
    Series out(n, 0);
    Real partial = 0;
    for (std::size_t m = 0; m + 1 < n; ++m) {
      partial += c[m];
      out[m + 1] = partial / static_cast<unsigned>(m + 1);
    }
    c = std::move(out);
  } else {
    if (c[0] != 0) throw InternalError("zeta_numeric: divergent integral at 0");
    for (std::size_t m = 1; m < n; ++m) c[m] /= static_cast<unsigned>(m);
  }
}

Real evaluate_at_half(const Series& c) {
  Real sum = 0;
  Real power = 1;
  for (const auto& coeff : c) {
    sum += coeff * power;
    power /= 2;
  }
  return sum;
}

Letter swapped(Letter l) { return l == Letter::x ? Letter::y : Letter::x; }

}  // namespace

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_) {
    if (k < 1) throw PreconditionError("index parts must be positive");
  }
}

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Index parse_index(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '(' || text[i] == ')')) {
      ++i;
    }
  };
  for (skip(); i < text.size(); skip()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("illegal character in index", i);
    long value = 0;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i++] - '0');
      if (value > 1'000'000) throw ParseError("index part too large", start);
    }
    if (value < 1) throw ParseError("index parts must be positive", start);
    parts.push_back(static_cast<int>(value));
  }
  if (parts.empty()) throw ParseError("empty index", 0);
  return Index(std::move(parts));
}

std::string render(const Index& i) {
  std::string out = "(";
  for (std::size_t j = 0; j < i.parts().size(); ++j) {
    if (j) out += ",";
    out += std::to_string(i.parts()[j]);
  }
  return out + ")";
}

Index word_index(const Word& w) {
  if (!in_yA(w)) throw DomainError("word_index: word " + render(w) + " is not in yA");
  std::vector<int> parts;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (w[i] == Letter::y) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return Index(std::move(parts));
}

Word index_word(const Index& i) {
  std::string letters;
  for (int k : i.parts()) {
    letters += 'y';
    letters.append(static_cast<std::size_t>(k - 1), 'x');
  }
  return Word(std::move(letters));
}

Relation relation_from_rtm(const ForestSum& f, const Word& w) {
  if (counit(f) != 0) throw PreconditionError("relation_from_rtm: forest sum has a nonzero I component");
  if (!in_yAx(w)) throw PreconditionError("relation_from_rtm: seed " + render(w) + " is not admissible");
  WordSum lhs = rtm_apply(f, WordSum(w));
  for (const auto& [word, c] : lhs) {
    if (!in_yAx(word)) throw InternalError("relation_from_rtm: produced non-admissible word " + render(word));
  }
  return {std::move(lhs), RtmSource{f, w}};
}

Relation duality_relation(const Word& w) {
  if (!in_yAx(w)) throw DomainError("duality_relation: word " + render(w) + " is not in yAx");
  return {WordSum(w) - tau(WordSum(w)), DualitySource{w}};
}

Real zeta_numeric(const Index& i, int terms) {
  if (!i.admissible()) throw PreconditionError("zeta_numeric: index " + render(i) + " diverges");
  if (terms < 16) throw PreconditionError("zeta_numeric: terms must be at least 16");
  const Word w = index_word(i);
  const std::size_t m = w.degree();
  const auto n = static_cast<std::size_t>(terms);

  // prefix[j] = I(0→½; a₁⋯a_j), suffix[j] = I(0→½; τ(a_{j+1}⋯a_m)).
  std::vector<Real> prefix(m + 1), suffix(m + 1);
  Series series(n, 0);
  series[0] = 1;
  prefix[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    integrate(series, w[j]);
    prefix[j + 1] = evaluate_at_half(series);
  }
  std::fill(series.begin(), series.end(), Real(0));
  series[0] = 1;
  suffix[m] = 1;
  for (std::size_t j = m; j-- > 0;) {
    integrate(series, swapped(w[j]));
    suffix[j] = evaluate_at_half(series);
  }
  Real total = 0;
  for (std::size_t j = 0; j <= m; ++j) total += prefix[j] * suffix[j];
  return total;
}

TruncatedZeta zeta_truncated(const Index& i, long cutoff) {
  if (!i.admissible()) throw PreconditionError("zeta_truncated: index " + render(i) + " diverges");
  if (cutoff < 10) throw PreconditionError("zeta_truncated: cutoff must be at least 10");
  const auto& parts = i.parts();
  const std::size_t r = parts.size();
  // level[n] = Σ over 0 < n₁ < ⋯ < n_j <= n of the first j factors.
  std::vector<long double> level(static_cast<std::size_t>(cutoff) + 1, 1.0L);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<long double> next(level.size(), 0.0L);
    for (long n = 1; n <= cutoff; ++n) {
      const long double term = level[static_cast<std::size_t>(n - 1)] * std::pow(static_cast<long double>(n), -parts[j]);
      next[static_cast<std::size_t>(n)] = next[static_cast<std::size_t>(n - 1)] + term;
    }
    level = std::move(next);
  }

  // Inner sum for n_r = n is at most H_{n-1}^{a}/a! <= (1 + log n)^a / a!, a = r-1;
  // the remainder is bounded by the integral of (1 + log t)^a t^{-k} over [N, ∞).
  const int a = static_cast<int>(r) - 1;
  const int k = parts.back();
  const long double log_term = 1.0L + std::log(static_cast<long double>(cutoff));
  if (log_term * k < a) throw PreconditionError("zeta_truncated: cutoff too small for a monotone tail bound");
  long double integral = 0;
  long double falling = 1;  // a!/(a-j)!
  for (int j = 0; j <= a; ++j) {
    integral += falling * std::pow(log_term, a - j) / std::pow(static_cast<long double>(k - 1), j + 1);
    falling *= a - j;
  }
  integral *= std::pow(static_cast<long double>(cutoff), 1 - k);
  long double factorial = 1;
  for (int j = 2; j <= a; ++j) factorial *= j;
  return {level.back(), integral / factorial};
}

NumericCheck verify_relation_numeric(const Relation& r, double tol, int terms) {
  if (!(tol > 0)) throw PreconditionError("verify_relation_numeric: tolerance must be positive");
  Real sum = 0;
  for (const auto& [w, c] : r.lhs) {
    sum += Real(c.get_num().get_str()) / Real(c.get_den().get_str()) * zeta_numeric(word_index(w), terms);
  }
  Real residual = abs(sum);
  return {residual < tol, residual};
}

std::string format_real(const Real& value, int digits) { return value.str(digits); }

}  // namespace ckrtm::mzv
