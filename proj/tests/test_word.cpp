#include <doctest.h>

#include "ckrtm/error.hpp"
#include "ckrtm/verify.hpp"
#include "ckrtm/word.hpp"

using namespace ckrtm;

namespace {

WordSum P(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("parsing and rendering polynomials") {
  CHECK(P("yx") == WordSum("yx"_w));
  CHECK(P("z") == letter_x() + letter_y());
  CHECK(P("yxx + 2 yyx").size() == 2);
  CHECK(P("yxx + 2 yyx").coefficient("yyx"_w) == 2);
  CHECK(P("1/3 yx - 1/3 yx").is_zero());
  CHECK(P("2*yx") == P("yx + yx"));
  CHECK(P("-1") == unit_word() * Rational(-1));
  CHECK(render(P("2 yyx + yxx")) == "yxx + 2 yyx");
  CHECK(render(P("-yx - 1/2 x")) == "-1/2 x - yx");
  CHECK(render(WordSum()) == "0");
  CHECK(render(unit_word()) == "1");
  CHECK(render(P("zz")) == "xx + xy + yx + yy");
}

TEST_CASE("rendered polynomials parse back") {
  for (const char* text : {"yxx + 2 yyx", "-1/2 x - yx", "1 + y", "zzy - 3/7 xyx", "0"}) {
    const WordSum p = P(text);
    CHECK(P(render(p).c_str()) == p);
  }
}

TEST_CASE("parse errors carry an offset") {
  try {
    parse_word("yx + ya");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_word("yx +"), ParseError);
  CHECK_THROWS_AS(parse_word("1/0 y"), ParseError);
  CHECK_THROWS_AS(Word("xq"), DomainError);
}

TEST_CASE("concatenation and one-sided multiplication") {
  CHECK(concat(P("yx"), P("x")) == P("yxx"));
  CHECK(concat(P("x + y"), P("yx")) == P("xyx + yyx"));
  CHECK(concat(unit_word(), P("xyy")) == P("xyy"));
  CHECK(left_mul(P("x + 2y"), unit_word()) == P("x + 2 y"));
  CHECK(right_mul(P("-y"), P("2x + y")) == P("-2 yx - yy"));
  CHECK(left_mul(P("y"), P("x")) == P("yx"));
}

TEST_CASE("one-sided division") {
  CHECK(left_div_y(P("yx + 2 yy")) == P("x + 2 y"));
  CHECK(right_div_x(P("yxx")) == P("yx"));
  CHECK_THROWS_AS(left_div_y(P("xy")), DomainError);
  CHECK_THROWS_AS(right_div_x(P("xy")), DomainError);
  CHECK_THROWS_AS(left_div_y(unit_word()), DomainError);
}

TEST_CASE("endomorphism examples") {
  CHECK(tau(P("yxx")) == P("yyx"));
  CHECK(tau(P("yyx")) == P("yxx"));
  CHECK(phi(P("yx")) == P("-yx - yy"));
  CHECK(d(P("yxy")) == P("yxx + yxy"));
  CHECK(sigma(P("xyy")) == P("xyy"));
  CHECK(sigma(P("xy")) == P("-xy"));
  CHECK(reverse(P("xxy")) == P("yxx"));
  CHECK(rho(P("yxy")) == P("yyx"));
  CHECK(d(unit_word()) == unit_word());
  CHECK_THROWS_AS(d(P("x")), DomainError);
  CHECK_THROWS_AS(rho(P("xy")), DomainError);
  CHECK(endo_map_from_name("epsilon") == EndoMap::reverse);
  CHECK(endo_map(EndoMap::tau, P("yx")) == P("yx"));
}

TEST_CASE("involutions and subspace preservation up to degree 8") {
  for (const auto& w : words_up_to(8)) {
    const WordSum p(w);
    CHECK(tau(tau(p)) == p);
    CHECK(phi(phi(p)) == p);
    CHECK(sigma(sigma(p)) == p);
    if (in_A1(w)) CHECK(in_A1(phi(p)));
    if (in_yAx(w)) CHECK(in_yAx(tau(p)));
  }
}

TEST_CASE("word lists") {
  CHECK(words_of_length(3).size() == 8);
  CHECK(words_up_to(4).size() == 31);
  CHECK(a1_words(0) == std::vector<Word>{Word()});
  CHECK(a1_words(3).size() == 4);
  CHECK(words_of_length(2) == std::vector<Word>{"xx"_w, "xy"_w, "yx"_w, "yy"_w});
}

TEST_CASE("composite operator identity on yA") {
  const auto report = verify_identity(Identity::op_eq3);
  CHECK(report.passed);
  CHECK(report.checked == 63);
}
