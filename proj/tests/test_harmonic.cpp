#include <doctest.h>

#include "ckrtm/error.hpp"
#include "ckrtm/harmonic.hpp"
#include "ckrtm/verify.hpp"
#include "oracles.hpp"

using namespace ckrtm;

namespace {

WordSum P(const char* text) { return parse_word(text); }
WordSum W(const Word& w) { return WordSum(w); }

std::vector<Word> a1_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& w : a1_words(k)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("block view") {
  CHECK(BlockView::of("yxyyxx"_w).blocks() == std::vector<int>{2, 1, 3});
  CHECK(BlockView({1, 3, 2}).word() == "yyxxyx"_w);
  CHECK(BlockView::of(Word()).depth() == 0);
  CHECK(block_word(3) == "yxx"_w);
  CHECK_THROWS_AS(BlockView::of("xy"_w), DomainError);
}

TEST_CASE("star product examples") {
  CHECK(star(P("y"), P("yx")) == P("yyx + yxy + yxx"));
  CHECK(star(P("y"), P("y")) == P("2 yy + yx"));
  CHECK(star(unit_word(), P("yxy")) == P("yxy"));
}

TEST_CASE("harub product examples") {
  CHECK(harub(P("y"), P("y")) == P("2 yy - yx"));
  CHECK(harub(P("y"), P("yx")) == P("yyx + yxy - yxx"));
  CHECK(harub(P("yxy"), unit_word()) == P("yxy"));
}

TEST_CASE("diamond product examples") {
  CHECK(diamond(P("y"), P("y")) == P("yy - yx"));
  CHECK(diamond(P("x"), P("y")) == P("xy + yx"));
  CHECK(diamond(P("z"), P("y")) == P("xy + yy"));
  CHECK(diamond(unit_word(), P("xxy")) == P("xxy"));
}

TEST_CASE("star and harub agree with the brute-force quasi-shuffle") {
  for (const auto& a : a1_up_to(6)) {
    for (const auto& b : a1_up_to(6 - a.degree())) {
      CAPTURE(a.letters());
      CAPTURE(b.letters());
      CHECK(star(W(a), W(b)) == oracle::quasi_shuffle_words(a.letters(), b.letters(), 1));
      CHECK(harub(W(a), W(b)) == oracle::quasi_shuffle_words(a.letters(), b.letters(), -1));
    }
  }
}

TEST_CASE("star models the product of truncated nested sums") {
  // Σ_{n₁<…<n_r<=m} is multiplicative under ∗ for every cutoff m.
  for (const auto& a : a1_up_to(4)) {
    for (const auto& b : a1_up_to(4)) {
      const WordSum s = star(W(a), W(b));
      for (int m = 1; m <= 5; ++m) {
        mpq_class rhs = 0;
        for (const auto& [w, c] : s) rhs += c * oracle::nested_sum(oracle::blocks(w.letters()), m);
        CHECK(oracle::nested_sum(oracle::blocks(a.letters()), m) * oracle::nested_sum(oracle::blocks(b.letters()), m) ==
              rhs);
      }
    }
  }
}

TEST_CASE("diamond is the phi conjugate of the brute-force star") {
  for (const auto& a : a1_up_to(4)) {
    for (const auto& b : a1_up_to(4 - a.degree())) {
      WordSum conj;
      for (const auto& [u, cu] : phi(W(a))) {
        for (const auto& [v, cv] : phi(W(b))) {
          conj.add_scaled(oracle::quasi_shuffle_words(u.letters(), v.letters(), 1), cu * cv);
        }
      }
      CHECK(diamond(W(a), W(b)) == phi(conj));
    }
  }
}

TEST_CASE("u map examples") {
  CHECK(u_map(Word()) == tensor(unit_word(), unit_word()));
  CHECK(u_map("yx"_w) == tensor(unit_word(), P("yx")) - tensor(P("yx"), unit_word()));
  CHECK(u_map("yy"_w) ==
        tensor(unit_word(), P("yx + yy")) - tensor(P("y"), P("y")) + tensor(P("yy"), unit_word()));
}

TEST_CASE("componentwise star on tensors") {
  CHECK(tensor_star(tensor(unit_word(), P("yx")), tensor(P("y"), unit_word())) == tensor(P("y"), P("yx")));
  const auto t = u_map("yxy"_w) + tensor(P("y"), P("yy"));
  CHECK(tensor_star(tensor(unit_word(), unit_word()), t) == t);
  CHECK(tensor_star(u_map("y"_w), u_map("y"_w)) == u_map(harub(P("y"), P("y"))));
}

TEST_CASE("contraction M") {
  CHECK(m_contract(u_map("yx"_w)).is_zero());
  CHECK(m_contract(u_map("yy"_w)).is_zero());
  CHECK(m_contract(tensor(P("y"), P("y"))) == P("2 yy + yx"));
}

TEST_CASE("p and q on generators") {
  CHECK(pq_of_u(PQ::p, "yx"_w) == u_map("yxx"_w));
  CHECK(pq_of_u(PQ::p, "yx"_w) == pq_definitional(PQ::p, "yx"_w));
  // The definitions give q(u_w) = -u(yw); see the README.
  CHECK(pq_definitional(PQ::q, "yx"_w) == u_map("yyx"_w) * Rational(-1));
  CHECK(pq_of_u(PQ::q, "yx"_w) == pq_definitional(PQ::q, "yx"_w));
  CHECK(pq_termwise(PQ::p, u_map("yxy"_w)) == pq_definitional(PQ::p, "yxy"_w));
}

TEST_CASE("membership in B") {
  CHECK(b_membership(u_map("yx"_w), 2));
  CHECK_FALSE(b_membership(tensor(P("yx"), unit_word()), 2));
  CHECK(b_membership(tensor_star(u_map("y"_w), u_map("y"_w)), 2));
  CHECK(b_membership(WordTensorSum(), 3));
  CHECK_THROWS_AS(b_membership(u_map("yx"_w) + u_map("y"_w), 2), PreconditionError);
  const auto coords = b_coordinates(u_map("yy"_w) * Rational(3) - u_map("yx"_w), 2);
  REQUIRE(coords);
  CHECK(*coords == std::vector<Rational>{-1, 3});
}

TEST_CASE("harmonic identities on their default grids") {
  for (Identity id : {Identity::star_laws, Identity::harub_laws, Identity::diamond_laws, Identity::diamond_z_linear,
                      Identity::harmonic_alternating_sum, Identity::d_transport, Identity::phi_transport,
                      Identity::diamond_letter_y, Identity::u_multiplicative, Identity::u_recursion,
                      Identity::pq_closed_forms, Identity::m_kills_u}) {
    const auto report = verify_identity(id);
    CAPTURE(report.identity);
    CHECK(report.passed);
    CHECK(report.checked > 0);
  }
}
