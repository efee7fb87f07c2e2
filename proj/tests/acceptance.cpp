// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ckrtm/faults.hpp"
#include "ckrtm/hopf.hpp"
#include "ckrtm/mzv.hpp"
#include "ckrtm/verify.hpp"

using namespace ckrtm;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

// Runs each identity at its default bounds; all must pass.
Outcome sweep(std::initializer_list<Identity> ids) {
  std::string detail;
  bool ok = true;
  for (Identity id : ids) {
    const auto r = verify_identity(id);
    ok = ok && r.passed;
    detail += (detail.empty() ? "" : ", ") + r.identity + (r.passed ? "" : " FAILED") + " [" +
              std::to_string(r.checked) + "]";
  }
  return {ok, detail};
}

std::vector<Word> admissible_words(std::size_t lo, std::size_t hi) {
  std::vector<Word> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    for (const auto& w : a1_words(n)) {
      if (in_yAx(w)) out.push_back(w);
    }
  }
  return out;
}

Outcome numeric() {
  using mzv::Index;
  const auto z2 = mzv::zeta_numeric(Index({2})).convert_to<long double>();
  const auto bracket = mzv::zeta_truncated(Index({2}), 10000);
  const bool in_bracket = z2 >= bracket.value - 1e-10L && z2 <= bracket.value + bracket.tail_bound + 1e-10L;
  const auto euler = abs(mzv::zeta_numeric(Index({1, 2})) - mzv::zeta_numeric(Index({3})));
  const bool euler_ok = euler < 1e-10;

  mzv::Real worst_rtm = 0;
  std::size_t rtm_count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& f : enumerate_forests(n)) {
      for (const auto& w : admissible_words(2, 4)) {
        const auto rel = mzv::relation_from_rtm(ForestSum(f), w);
        const auto check = mzv::verify_relation_numeric(rel);
        if (check.residual > worst_rtm) worst_rtm = check.residual;
        ++rtm_count;
      }
    }
  }
  mzv::Real worst_dual = 0;
  std::size_t dual_count = 0;
  for (const auto& w : admissible_words(2, 6)) {
    const auto check = mzv::verify_relation_numeric(mzv::duality_relation(w));
    if (check.residual > worst_dual) worst_dual = check.residual;
    ++dual_count;
  }
  const bool ok = in_bracket && euler_ok && worst_rtm < 1e-8 && worst_dual < 1e-8;
  return {ok, "zeta(2) in bracket: " + std::string(in_bracket ? "yes" : "no") +
                  ", |zeta(1,2)-zeta(3)| = " + mzv::format_real(euler, 3) + ", " + std::to_string(rtm_count) +
                  " tree-map relations max residual " + mzv::format_real(worst_rtm, 3) + ", " +
                  std::to_string(dual_count) + " duality relations max residual " + mzv::format_real(worst_dual, 3)};
}

Outcome mutation() {
  const std::initializer_list<Identity> guarded = {
      Identity::thm1,        Identity::thm2,           Identity::cor,
      Identity::prop_FG0,    Identity::lem_z,          Identity::d_transport,
      Identity::diamond_letter_y, Identity::u_multiplicative, Identity::harmonic_alternating_sum,
      Identity::u_recursion, Identity::pq_closed_forms, Identity::lem_tau,
      Identity::op_eq3,      Identity::prop_FS};
  std::string detail;
  bool ok = true;
  for (auto [fault, name] : {std::pair{faults::Fault::diamond_xx_sign, "diamond xx sign"},
                             std::pair{faults::Fault::g_dot_sign, "G of the vertex sign"}}) {
    std::vector<std::string> caught;
    {
      faults::ScopedFault guard(fault);
      for (Identity id : guarded) {
        const auto r = verify_identity(id);
        if (!r.passed) caught.push_back(r.identity);
      }
    }
    ok = ok && !caught.empty();
    std::string list;
    for (const auto& c : caught) list += (list.empty() ? "" : " ") + c;
    detail += (detail.empty() ? "" : "; ") + std::string(name) + " caught by: " + (list.empty() ? "nothing" : list);
  }
  // The clean build must still pass once the guards are gone.
  const auto clean = sweep({Identity::thm1, Identity::cor});
  return {ok && clean.passed, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hopf axioms on all forests of degree <= 5",
       [] { return sweep({Identity::coassociativity, Identity::antipode_axioms}); }, 60},
      {2, "recursive coproduct equals the subtree formula, trees <= 6", [] { return sweep({Identity::coproduct_oracle}); },
       0},
      {3, "F_f diamond formula for tree maps, grid plus 200 random", [] { return sweep({Identity::thm1}); }, 0},
      {4, "G_f formula for antipode maps and G_f = F_S(f)", [] { return sweep({Identity::thm2, Identity::cor}); }, 0},
      {5, "antipode map equals tau conjugation", [] { return sweep({Identity::thm3}); }, 0},
      {6, "diamond with F_f splits over the coproduct", [] { return sweep({Identity::prop_key}); }, 0},
      {7, "sum of F_f' diamond G_f'' vanishes, degree 1-5", [] { return sweep({Identity::prop_FG0}); }, 0},
      {8, "Sweedler tensor of phi(F), phi(G) lies in B", [] { return sweep({Identity::prop_B, Identity::lem_pq}); },
       0},
      {9, "word-algebra lemmas on exhaustive small inputs",
       [] {
         return sweep({Identity::lem_z, Identity::d_transport, Identity::diamond_letter_y, Identity::u_multiplicative,
                       Identity::harmonic_alternating_sum, Identity::u_recursion, Identity::pq_closed_forms,
                       Identity::lem_tau, Identity::op_eq3, Identity::prop_FS});
       },
       0},
      {10, "rank of {F_f : deg f = n} is 2^(n-1) for n = 1..5", [] { return sweep({Identity::span_rank}); }, 0},
      {11, "numeric multiple zeta values and relation residuals", numeric, 120},
      {12, "sign mutations are caught", mutation, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.passed = false;
      o.detail += " (over time budget)";
    }
    if (!o.passed) ++failures;
    std::printf("criterion %2d: %s  %s  (%.2f s)\n    %s\n", c.number, o.passed ? "PASS" : "FAIL", c.title, secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
