#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ckrtm {

using Rational = mpq_class;

/// Reduced "p/q" with q > 0; the denominator is always written ("3/1").
std::string fraction_string(const Rational& q);

/// "p", "p/q", optionally signed. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace ckrtm
