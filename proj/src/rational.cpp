#include "ckrtm/rational.hpp"

#include <cctype>

#include "ckrtm/error.hpp"

namespace ckrtm {

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
    ++digits;
  }
  if (digits == 0) throw ParseError("expected digits in rational", i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (den.empty()) throw ParseError("expected denominator", i);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", i);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator", text.size());
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace ckrtm
