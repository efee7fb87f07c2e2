#include <doctest.h>

#include <thread>

#include "ckrtm/error.hpp"
#include "ckrtm/hopf.hpp"
#include "ckrtm/limits.hpp"
#include "ckrtm/verify.hpp"
#include "oracles.hpp"

using namespace ckrtm;

namespace {

ForestTensorSum tensor_of(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  ForestTensorSum out;
  for (const auto& [l, r, c] : terms) out.add({parse_forest(l), parse_forest(r)}, c);
  return out;
}

ForestSum sum_of(std::initializer_list<std::pair<const char*, int>> terms) {
  ForestSum out;
  for (const auto& [f, c] : terms) out.add(parse_forest(f), c);
  return out;
}

}  // namespace

TEST_CASE("parsing canonicalizes child and tree order") {
  CHECK(render(parse_forest("[]")) == "[]");
  CHECK(parse_forest("[]").is_tree());
  CHECK(render(parse_forest("[[][[]]]")) == "[[][[]]]");
  CHECK(render(parse_forest("[[[]][]]")) == "[[][[]]]");
  CHECK(parse_forest("[[]][]") == parse_forest("[][[]]"));
  CHECK(render(parse_forest(" [ ] [ [ ] ] ")) == "[][[]]");
  CHECK(parse_forest("I").is_unit());
  CHECK(parse_forest("").is_unit());
  CHECK(render_forest_label(Forest()) == "I");
}

TEST_CASE("malformed forests report the offending byte") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_forest(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("[[]") >= 0);
  CHECK(offset_of("[]]") == 2);
  CHECK(offset_of("[a]") == 1);
  CHECK(offset_of("[]I") == 2);
  CHECK_THROWS_AS(parse_tree("[][]"), ParseError);
}

TEST_CASE("enumeration counts match the rooted tree recurrence") {
  const auto a = oracle::rooted_tree_counts(7);
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    // Forests on n vertices correspond to trees on n + 1 vertices via B₊.
    CHECK(static_cast<long long>(enumerate_forests(n).size()) == a[n + 1]);
    CHECK(static_cast<long long>(enumerate_trees(n).size()) == a[n]);
  }
  CHECK(enumerate_forests(1).size() == 1);
  CHECK(enumerate_forests(2).size() == 2);
  CHECK(enumerate_forests(4).size() == 9);
  // Output is sorted and duplicate free.
  const auto& f5 = enumerate_forests(5);
  CHECK(std::is_sorted(f5.begin(), f5.end()));
  CHECK(std::adjacent_find(f5.begin(), f5.end()) == f5.end());
}

TEST_CASE("enumeration respects the degree cap") {
  const auto saved = max_degree();
  set_max_degree(3);
  CHECK_THROWS_AS(enumerate_forests(4), ResourceLimitError);
  set_max_degree(saved);
}

TEST_CASE("grafting and ungrafting") {
  CHECK(b_plus(Forest()) == Tree());
  CHECK(b_plus(Forest(Tree())) == ladder(2));
  const Tree cherry = b_plus(parse_forest("[][]"));
  CHECK(cherry == corolla(2));
  CHECK(b_minus(cherry) == parse_forest("[][]"));
  for (const auto& t : enumerate_trees(5)) CHECK(b_plus(b_minus(t)) == t);
}

TEST_CASE("coproduct examples") {
  CHECK(coproduct(parse_forest("[]")) == tensor_of({{"I", "[]", 1}, {"[]", "I", 1}}));
  CHECK(coproduct(parse_forest("[[]]")) == tensor_of({{"I", "[[]]", 1}, {"[]", "[]", 1}, {"[[]]", "I", 1}}));
  CHECK(coproduct(parse_forest("[][]")) == tensor_of({{"I", "[][]", 1}, {"[]", "[]", 2}, {"[][]", "I", 1}}));
  CHECK(coproduct(Forest()) == tensor_of({{"I", "I", 1}}));
}

TEST_CASE("subtree oracle on named trees") {
  CHECK(coproduct_oracle(ladder(3)) ==
        tensor_of({{"I", "[[[]]]", 1}, {"[]", "[[]]", 1}, {"[[]]", "[]", 1}, {"[[[]]]", "I", 1}}));
  // Removing only the root of B₊(• ladder₂) leaves • ⊗ (• · ladder₂).
  const auto t = coproduct_oracle(parse_tree("[[][[]]]"));
  CHECK(t.coefficient({parse_forest("[]"), parse_forest("[][[]]")}) == 1);
}

TEST_CASE("antipode examples") {
  CHECK(antipode(parse_forest("[]")) == sum_of({{"[]", -1}}));
  CHECK(antipode(parse_forest("[[]]")) == sum_of({{"[[]]", -1}, {"[][]", 1}}));
  CHECK(antipode(parse_forest("[][]")) == sum_of({{"[][]", 1}}));
  CHECK(antipode(Forest()) == sum_of({{"I", 1}}));
}

TEST_CASE("counit and multiplicativity") {
  CHECK(counit(Forest()) == 1);
  CHECK(counit(parse_forest("[][]")) == 0);
  for (const auto& f : enumerate_forests(4)) {
    const auto trees = f.trees();
    ForestTensorSum product(ForestPair{Forest(), Forest()});
    ForestSum s(Forest{});
    for (const auto& t : trees) {
      product = multiply(product, coproduct(Forest(t)));
      s = multiply(s, antipode(Forest(t)));
    }
    CHECK(product == coproduct(f));
    CHECK(s == antipode(f));
  }
}

TEST_CASE("Hopf axioms and the subtree oracle over the full default grid") {
  for (Identity id : {Identity::coassociativity, Identity::antipode_axioms, Identity::coproduct_oracle}) {
    const auto report = verify_identity(id);
    CAPTURE(report.identity);
    CHECK(report.passed);
  }
}

TEST_CASE("concurrent readers see identical coproducts") {
  const auto forests = enumerate_forests(5);
  std::vector<std::vector<ForestTensorSum>> seen(4);
  std::vector<std::thread> threads;
  for (auto& slot : seen) {
    threads.emplace_back([&forests, &slot] {
      for (const auto& f : forests) slot.push_back(coproduct(f));
    });
  }
  for (auto& t : threads) t.join();
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i] == seen[0]);
}
