#include "ckrtm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "ckrtm/error.hpp"
#include "ckrtm/harmonic.hpp"
#include "ckrtm/hopf.hpp"
#include "ckrtm/limits.hpp"
#include "ckrtm/rtm.hpp"

namespace ckrtm {

namespace {

struct Resolved {
  int forest_degree;
  int word_length;
  int random_cases;
  std::uint64_t seed;
};

using Case = std::function<std::optional<Fields>()>;

const std::vector<IdentityInfo> kIdentities = {
    // id, name, summary, forests, words, random, fd, wl, rc
    {Identity::coassociativity, "coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ and grading of Sweedler terms", true, false, false, 5, 0, 0},
    {Identity::antipode_axioms, "antipode", "m(S⊗id)Δ(f) = m(id⊗S)Δ(f) = ε(f)I", true, false, false, 5, 0, 0},
    {Identity::coproduct_oracle, "coproduct_oracle", "recursive Δ(t) equals the subtree-sum formula", true, false, false, 6, 0, 0},
    {Identity::star_laws, "star_laws", "∗ is commutative and associative on A¹", false, true, false, 0, 5, 0},
    {Identity::harub_laws, "harub_laws", "⊛ is commutative and associative on A¹", false, true, false, 0, 5, 0},
    {Identity::diamond_laws, "diamond_laws", "⋄ is commutative and associative on A", false, true, false, 0, 5, 0},
    {Identity::diamond_z_linear, "z_linear", "zw₁⋄w₂ = w₁⋄zw₂ = z(w₁⋄w₂)", false, true, false, 0, 4, 0},
    {Identity::harmonic_alternating_sum, "alternating_sum", "Σ_i (-1)^i yx^{k₁-1}⋯yx^{k_i-1} ∗ yx^{k_r-1}zx^{k_{r-1}-1}⋯zx^{k_{i+1}-1} = 0", false, true, false, 0, 6, 0},
    {Identity::d_transport, "d_transport", "d(w₁⊛w₂) = d(w₁)∗d(w₂)", false, true, false, 0, 5, 0},
    {Identity::phi_transport, "phi_transport", "w₁⋄w₂ = φ(φ(w₁)∗φ(w₂)) on A¹", false, true, false, 0, 5, 0},
    {Identity::diamond_letter_y, "letter_y", "w₁xw₂⋄y = (w₁⋄y)xw₂ + w₁x(w₂⋄y)", false, true, false, 0, 5, 0},
    {Identity::u_multiplicative, "u_multiplicative", "u(w₁⊛w₂) = u(w₁)∗u(w₂)", false, true, false, 0, 5, 0},
    {Identity::u_recursion, "u_recursion", "u(w) = 1⊗dρ(w) - L'_{m₁}u(yx^{m₂-1}⋯)", false, true, false, 0, 6, 0},
    {Identity::pq_closed_forms, "pq_closed_forms", "closed forms of p(u_w), q(u_w) match the definitions and lie in B", false, true, false, 0, 5, 0},
    {Identity::m_kills_u, "m_u_zero", "M(u(w)) = 0 for w ∈ yA", false, true, false, 0, 6, 0},
    {Identity::op_eq3, "op_eq3", "-φR_x^{-1}τR_xφ = dρσ on yA", false, true, false, 0, 6, 0},
    {Identity::thm1, "thm1", "f̃(wx) = (F_f⋄w)x", true, true, true, 4, 4, 200},
    {Identity::thm2, "thm2", "S(f)~(wx) = (G_f⋄w)x", true, true, true, 4, 4, 200},
    {Identity::cor, "cor", "G_f = F_{S(f)}", true, false, false, 5, 0, 0},
    {Identity::thm3, "thm3", "S(f)~ = τf̃τ", true, true, false, 3, 4, 0},
    {Identity::lem_z, "lem_z", "f̃(zw) = zf̃(w), f̃(wz) = f̃(w)z (deg f + |w| <= forest degree bound)", true, true, false, 5, 4, 0},
    {Identity::prop_key, "prop_key", "w₁xw₂⋄F_f = Σ (F_f'⋄w₁)x(F_f''⋄w₂)", true, true, false, 3, 2, 0},
    {Identity::lem_pq, "lem_pq", "p, q on Σφ(F_f')⊗φ(G_f'') via closed forms equal the displayed formulas", true, false, false, 4, 0, 0},
    {Identity::prop_B, "prop_B", "Σφ(F_f')⊗φ(G_f'') ∈ B", true, false, false, 4, 0, 0},
    {Identity::prop_FG0, "prop_FG0", "Σ F_f'⋄G_f'' = 0 for f ∈ Aug", true, false, false, 5, 0, 0},
    {Identity::prop_FS, "prop_FS", "F_f = -yτL_y^{-1}F_{S(f)}", true, false, false, 5, 0, 0},
    {Identity::lem_tau, "lem_tau", "(yw₁⋄yw₂)x + yτ(yτ(w₁)⋄yτ(w₂)) = 0", false, true, false, 0, 5, 0},
    {Identity::factor_order, "factor_order", "g̃h̃ = h̃g̃ = (gh)~ for every factorization", true, true, false, 4, 3, 0},
    {Identity::rtm_image, "rtm_image", "f̃(u) ∈ yA, F_f ∈ yA, f̃(x) = F_f x", true, false, false, 6, 0, 0},
    {Identity::span_rank, "span_rank", "rank{F_f : deg f = n} = 2^{n-1}", true, false, false, 5, 0, 0},
};

const WordSum& X() {
  static const WordSum v = letter_x();
  return v;
}
const WordSum& Y() {
  static const WordSum v = letter_y();
  return v;
}
const WordSum& Z() {
  static const WordSum v = letter_z();
  return v;
}

WordSum ws(const Word& w) { return WordSum(w); }

std::optional<Fields> mismatch(Fields inputs, const std::string& lhs, const std::string& rhs, bool equal) {
  if (equal) return std::nullopt;
  inputs.emplace_back("lhs", lhs);
  inputs.emplace_back("rhs", rhs);
  return inputs;
}

template <class T>
std::optional<Fields> compare(Fields inputs, const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return mismatch(std::move(inputs), render(lhs), render(rhs), false);
}

std::optional<Fields> compare_tuple3(Fields inputs, const LinearCombination<std::tuple<Forest, Forest, Forest>>& a,
                                     const LinearCombination<std::tuple<Forest, Forest, Forest>>& b) {
  if (a == b) return std::nullopt;
  auto show = [](const auto& s) {
    std::string out;
    for (const auto& [k, c] : s) {
      out += (out.empty() ? "" : " + ") + c.get_str() + " " + render_forest_label(std::get<0>(k)) + " (x) " +
             render_forest_label(std::get<1>(k)) + " (x) " + render_forest_label(std::get<2>(k));
    }
    return out.empty() ? std::string("0") : out;
  };
  return mismatch(std::move(inputs), show(a), show(b), false);
}

Fields forest_field(const Forest& f) { return {{"forest", render_forest_label(f)}}; }

Fields with(Fields fields, std::string key, const Word& w) {
  fields.emplace_back(std::move(key), render(w));
  return fields;
}

std::vector<Forest> forests_between(int lo, int hi) {
  std::vector<Forest> out;
  for (int n = lo; n <= hi; ++n) {
    const auto& level = enumerate_forests(static_cast<std::size_t>(n));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Word> a1_words_up_to(int n) {
  std::vector<Word> out;
  for (int k = 0; k <= n; ++k) {
    auto level = a1_words(static_cast<std::size_t>(k));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Word> ya_words_up_to(int n) {
  std::vector<Word> out;
  for (int k = 1; k <= n; ++k) {
    auto level = a1_words(static_cast<std::size_t>(k));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Ordered pairs from `pool` with total degree <= n.
std::vector<std::pair<Word, Word>> pairs_up_to(const std::vector<Word>& pool, int n) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (static_cast<int>(a.degree() + b.degree()) <= n) out.emplace_back(a, b);
    }
  }
  return out;
}

// Σ_{(f)} φ(F_f') ⊗ φ(G_f'').
WordTensorSum sweedler_fg(const Forest& f) {
  WordTensorSum out;
  for (const auto& [pair, c] : coproduct(f)) {
    out.add_scaled(tensor(phi(f_poly(pair.first)), phi(g_poly(pair.second))), c);
  }
  return out;
}

// ---- Hopf algebra -------------------------------------------------------

std::vector<Case> build_coassociativity(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f]() -> std::optional<Fields> {
      const auto delta = coproduct(f);
      for (const auto& [pair, c] : delta) {
        if (pair.first.degree() + pair.second.degree() != f.degree()) {
          Fields out = forest_field(f);
          out.emplace_back("grading", render_forest_label(pair.first) + " (x) " + render_forest_label(pair.second));
          return out;
        }
      }
      return compare_tuple3(forest_field(f), coproduct_left(delta), coproduct_right(delta));
    });
  }
  return cases;
}

std::vector<Case> build_antipode(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f]() -> std::optional<Fields> {
      const auto delta = coproduct(f);
      const ForestSum expected = ForestSum(Forest()) * counit(f);
      Fields left = forest_field(f);
      left.emplace_back("side", "left");
      if (auto bad = compare(left, antipode_left_convolution(delta), expected)) return bad;
      Fields right = forest_field(f);
      right.emplace_back("side", "right");
      return compare(right, antipode_right_convolution(delta), expected);
    });
  }
  return cases;
}

std::vector<Case> build_coproduct_oracle(const Resolved& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.forest_degree; ++n) {
    for (const auto& t : enumerate_trees(static_cast<std::size_t>(n))) {
      cases.push_back([t] { return compare(forest_field(Forest(t)), coproduct(Forest(t)), coproduct_oracle(t)); });
    }
  }
  return cases;
}

// ---- harmonic products --------------------------------------------------

using Product = WordSum (*)(const WordSum&, const WordSum&);

std::vector<Case> build_laws(const std::vector<Word>& pool, int n, Product product) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(pool, n)) {
    cases.push_back([a, c, product] {
      return compare(with(with({}, "w1", a), "w2", c), product(ws(a), ws(c)), product(ws(c), ws(a)));
    });
  }
  for (const auto& a : pool) {
    for (const auto& [c, e] : pairs_up_to(pool, n - static_cast<int>(a.degree()))) {
      if (static_cast<int>(a.degree()) > n) continue;
      cases.push_back([a, c, e, product] {
        return compare(with(with(with({}, "w1", a), "w2", c), "w3", e), product(product(ws(a), ws(c)), ws(e)),
                       product(ws(a), product(ws(c), ws(e))));
      });
    }
  }
  return cases;
}

std::vector<Case> build_z_linear(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(words_up_to(static_cast<std::size_t>(b.word_length)), b.word_length)) {
    cases.push_back([a, c]() -> std::optional<Fields> {
      Fields in = with(with({}, "w1", a), "w2", c);
      const WordSum expected = concat(Z(), diamond(ws(a), ws(c)));
      if (auto bad = compare(in, diamond(concat(Z(), ws(a)), ws(c)), expected)) return bad;
      return compare(in, diamond(ws(a), concat(Z(), ws(c))), expected);
    });
  }
  return cases;
}

// The right factor of the i-th term written with literal z letters, then parsed.
std::vector<Case> build_alternating_sum(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& w : ya_words_up_to(b.word_length)) {
    cases.push_back([w]() -> std::optional<Fields> {
      const auto k = BlockView::of(w).blocks();
      const std::size_t r = k.size();
      WordSum total;
      std::string left;
      for (std::size_t i = 0; i <= r; ++i) {
        std::string right;
        if (i < r) {
          right = "y" + std::string(k[r - 1] - 1, 'x');
          for (std::size_t j = r - 1; j-- > i;) right += "z" + std::string(k[j] - 1, 'x');
        }
        const WordSum lhs = left.empty() ? unit_word() : WordSum(Word(left));
        const WordSum rhs = right.empty() ? unit_word() : parse_word(right);
        total.add_scaled(star(lhs, rhs), i % 2 == 0 ? 1 : -1);
        if (i < r) left += "y" + std::string(k[i] - 1, 'x');
      }
      return compare(with({}, "word", w), total, WordSum());
    });
  }
  return cases;
}

std::vector<Case> build_d_transport(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(a1_words_up_to(b.word_length), b.word_length)) {
    cases.push_back([a, c] {
      return compare(with(with({}, "w1", a), "w2", c), d(harub(ws(a), ws(c))), star(d(ws(a)), d(ws(c))));
    });
  }
  return cases;
}

std::vector<Case> build_phi_transport(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(a1_words_up_to(b.word_length), b.word_length)) {
    cases.push_back([a, c] {
      return compare(with(with({}, "w1", a), "w2", c), diamond(ws(a), ws(c)), phi(star(phi(ws(a)), phi(ws(c)))));
    });
  }
  return cases;
}

std::vector<Case> build_letter_y(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(words_up_to(static_cast<std::size_t>(b.word_length)), b.word_length)) {
    cases.push_back([a, c] {
      const WordSum lhs = diamond(ws(a + Word(Letter::x) + c), Y());
      const WordSum rhs = concat(diamond(ws(a), Y()), ws(Word(Letter::x) + c)) +
                          concat(ws(a + Word(Letter::x)), diamond(ws(c), Y()));
      return compare(with(with({}, "w1", a), "w2", c), lhs, rhs);
    });
  }
  return cases;
}

std::vector<Case> build_u_multiplicative(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(a1_words_up_to(b.word_length), b.word_length)) {
    cases.push_back([a, c] {
      return compare(with(with({}, "w1", a), "w2", c), u_map(harub(ws(a), ws(c))), tensor_star(u_map(a), u_map(c)));
    });
  }
  return cases;
}

std::vector<Case> build_u_recursion(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& w : ya_words_up_to(b.word_length)) {
    cases.push_back([w] {
      const auto k = BlockView::of(w).blocks();
      const Word rest = BlockView(std::vector<int>(k.begin() + 1, k.end())).word();
      const WordTensorSum rhs = tensor(unit_word(), d(rho(ws(w)))) - left_shift(k.front(), u_map(rest));
      return compare(with({}, "word", w), u_map(w), rhs);
    });
  }
  return cases;
}

std::vector<Case> build_pq_closed(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& w : ya_words_up_to(b.word_length)) {
    cases.push_back([w]() -> std::optional<Fields> {
      for (PQ which : {PQ::p, PQ::q}) {
        Fields in = with({{"map", which == PQ::p ? "p" : "q"}}, "word", w);
        const WordTensorSum closed = pq_of_u(which, w);
        if (auto bad = compare(in, closed, pq_definitional(which, w))) return bad;
        if (!b_membership(closed, w.degree() + 1)) {
          in.emplace_back("membership", "closed form not in B");
          return in;
        }
      }
      return std::nullopt;
    });
  }
  return cases;
}

std::vector<Case> build_m_kills_u(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& w : ya_words_up_to(b.word_length)) {
    cases.push_back([w] { return compare(with({}, "word", w), m_contract(u_map(w)), WordSum()); });
  }
  return cases;
}

std::vector<Case> build_op_eq3(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& w : ya_words_up_to(b.word_length)) {
    cases.push_back([w] {
      const WordSum lhs = -phi(right_div_x(tau(concat(phi(ws(w)), X()))));
      return compare(with({}, "word", w), lhs, d(rho(sigma(ws(w)))));
    });
  }
  return cases;
}

std::vector<Case> build_lem_tau(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& [a, c] : pairs_up_to(words_up_to(static_cast<std::size_t>(b.word_length)), b.word_length)) {
    cases.push_back([a, c] {
      const WordSum ya = concat(Y(), ws(a));
      const WordSum yc = concat(Y(), ws(c));
      const WordSum lhs = concat(diamond(ya, yc), X()) +
                          concat(Y(), tau(diamond(concat(Y(), tau(ws(a))), concat(Y(), tau(ws(c))))));
      return compare(with(with({}, "w1", a), "w2", c), lhs, WordSum());
    });
  }
  return cases;
}

// ---- rooted tree maps ---------------------------------------------------

template <class Check>
std::vector<Case> forest_word_grid(const Resolved& b, Check check) {
  std::vector<Case> cases;
  const auto words = words_up_to(static_cast<std::size_t>(b.word_length));
  for (const auto& f : forests_between(1, b.forest_degree)) {
    for (const auto& w : words) cases.push_back([f, w, check] { return check(f, w); });
  }
  return cases;
}

template <class Check>
void add_random(std::vector<Case>& cases, const Resolved& b, Check check) {
  if (b.random_cases <= 0) return;
  require_degree(6, "random spot checks");
  std::mt19937_64 rng(b.seed);
  for (int i = 0; i < b.random_cases; ++i) {
    const auto& pool = enumerate_forests(5 + rng() % 2);
    const Forest f = pool[rng() % pool.size()];
    const std::size_t length = rng() % 6;
    std::string letters;
    for (std::size_t j = 0; j < length; ++j) letters += (rng() & 1U) ? 'y' : 'x';
    const Word w(letters);
    cases.push_back([f, w, check] {
      auto bad = check(f, w);
      if (bad) bad->emplace_back("random", "true");
      return bad;
    });
  }
}

std::optional<Fields> check_thm1(const Forest& f, const Word& w) {
  return compare(with(forest_field(f), "word", w), rtm_apply(f, w + Word(Letter::x)),
                 concat(diamond(f_poly(f), ws(w)), X()));
}

std::optional<Fields> check_thm2(const Forest& f, const Word& w) {
  return compare(with(forest_field(f), "word", w), rtm_apply(antipode(f), ws(w + Word(Letter::x))),
                 concat(diamond(g_poly(f), ws(w)), X()));
}

std::optional<Fields> check_thm3(const Forest& f, const Word& w) {
  return compare(with(forest_field(f), "word", w), rtm_apply(antipode(f), ws(w)), tau(rtm_apply(f, tau(ws(w)))));
}

std::vector<Case> build_lem_z(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    const int room = std::min(b.word_length, b.forest_degree - static_cast<int>(f.degree()));
    for (const auto& w : words_up_to(static_cast<std::size_t>(std::max(room, 0)))) {
      cases.push_back([f, w]() -> std::optional<Fields> {
        Fields in = with(forest_field(f), "word", w);
        const WordSum image = rtm_apply(f, w);
        if (auto bad = compare(in, rtm_apply(f, concat(Z(), ws(w))), concat(Z(), image))) return bad;
        return compare(in, rtm_apply(f, concat(ws(w), Z())), concat(image, Z()));
      });
    }
  }
  return cases;
}

std::vector<Case> build_prop_key(const Resolved& b) {
  std::vector<Case> cases;
  const auto words = words_up_to(static_cast<std::size_t>(b.word_length));
  for (const auto& f : forests_between(1, b.forest_degree)) {
    for (const auto& a : words) {
      for (const auto& c : words) {
        cases.push_back([f, a, c] {
          const WordSum lhs = diamond(ws(a + Word(Letter::x) + c), f_poly(f));
          WordSum rhs;
          for (const auto& [pair, coeff] : coproduct(f)) {
            rhs.add_scaled(concat(concat(diamond(f_poly(pair.first), ws(a)), X()), diamond(f_poly(pair.second), ws(c))),
                           coeff);
          }
          return compare(with(with(forest_field(f), "w1", a), "w2", c), lhs, rhs);
        });
      }
    }
  }
  return cases;
}

std::vector<Case> build_lem_pq(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f]() -> std::optional<Fields> {
      const std::size_t n = f.degree();
      const WordTensorSum t = sweedler_fg(f);
      const auto coords = b_coordinates(t, n);
      if (!coords) {
        Fields in = forest_field(f);
        in.emplace_back("membership", "Sweedler tensor not in B");
        return in;
      }
      const auto basis = a1_words(n);
      WordTensorSum via_p, via_q;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        via_p.add_scaled(pq_of_u(PQ::p, basis[i]), (*coords)[i]);
        via_q.add_scaled(pq_of_u(PQ::q, basis[i]), (*coords)[i]);
      }
      // The displayed right-hand sides, assembled from the Sweedler terms.
      const WordSum phi_g = phi(g_poly(f));
      WordTensorSum display_p = tensor(unit_word(), concat(phi_g, X()));
      WordTensorSum display_q = tensor(Y(), phi_g) - tensor(unit_word(), concat(phi_g, Z()));
      for (const auto& [pair, c] : coproduct(f)) {
        if (pair.first.is_unit()) continue;
        const WordSum left = phi(f_poly(pair.first));
        const WordSum right = phi(g_poly(pair.second));
        display_p.add_scaled(tensor(concat(WordSum("yx"_w), left_div_y(left)), right), c);
        display_q.add_scaled(tensor(concat(Y(), left), right), c);
      }
      Fields in_p = forest_field(f);
      in_p.emplace_back("map", "p");
      if (auto bad = compare(in_p, via_p, display_p)) return bad;
      Fields in_q = forest_field(f);
      in_q.emplace_back("map", "q");
      if (auto bad = compare(in_q, via_q, display_q)) return bad;
      if (!b_membership(display_p, n + 1) || !b_membership(display_q, n + 1)) {
        Fields in = forest_field(f);
        in.emplace_back("membership", "image not in B");
        return in;
      }
      return std::nullopt;
    });
  }
  return cases;
}

std::vector<Case> build_prop_b(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f]() -> std::optional<Fields> {
      const WordTensorSum t = sweedler_fg(f);
      if (b_membership(t, f.degree())) return std::nullopt;
      Fields in = forest_field(f);
      in.emplace_back("tensor", render(t));
      return in;
    });
  }
  return cases;
}

std::vector<Case> build_prop_fg0(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f] {
      WordSum sum;
      for (const auto& [pair, c] : coproduct(f)) sum.add_scaled(diamond(f_poly(pair.first), g_poly(pair.second)), c);
      return compare(forest_field(f), sum, WordSum());
    });
  }
  return cases;
}

std::vector<Case> build_cor(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f] { return compare(forest_field(f), g_poly(f), f_poly(antipode(f))); });
  }
  return cases;
}

std::vector<Case> build_prop_fs(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f] {
      return compare(forest_field(f), f_poly(f), -concat(Y(), tau(left_div_y(f_poly(antipode(f))))));
    });
  }
  return cases;
}

std::vector<Case> build_factor_order(const Resolved& b) {
  std::vector<Case> cases;
  const auto words = words_up_to(static_cast<std::size_t>(b.word_length));
  for (const auto& f : forests_between(2, b.forest_degree)) {
    const auto trees = f.trees();
    if (trees.size() < 2) continue;
    std::set<std::pair<Forest, Forest>> splits;
    for (unsigned mask = 1; mask + 1 < (1U << trees.size()); ++mask) {
      std::vector<Tree> g, h;
      for (std::size_t i = 0; i < trees.size(); ++i) (mask >> i & 1U ? g : h).push_back(trees[i]);
      splits.emplace(Forest(g), Forest(h));
    }
    for (const auto& [g, h] : splits) {
      for (const auto& w : words) {
        cases.push_back([f, g, h, w]() -> std::optional<Fields> {
          Fields in = with({{"forest", f.code()}, {"g", g.code()}, {"h", h.code()}}, "word", w);
          const WordSum whole = rtm_apply(f, w);
          if (auto bad = compare(in, rtm_apply(g, rtm_apply(h, w)), whole)) return bad;
          return compare(in, rtm_apply(h, rtm_apply(g, w)), whole);
        });
      }
    }
  }
  return cases;
}

std::vector<Case> build_rtm_image(const Resolved& b) {
  std::vector<Case> cases;
  for (const auto& f : forests_between(1, b.forest_degree)) {
    cases.push_back([f]() -> std::optional<Fields> {
      for (Letter u : {Letter::x, Letter::y}) {
        const WordSum image = rtm_letter(f, u);
        if (!in_yA(image)) return mismatch(with(forest_field(f), "letter", Word(u)), render(image), "in yA", false);
      }
      const WordSum fp = f_poly(f);
      if (!in_yA(fp)) return mismatch(forest_field(f), render(fp), "F_f in yA", false);
      return compare(forest_field(f), rtm_letter(f, Letter::x), concat(fp, X()));
    });
  }
  return cases;
}

std::vector<Case> build_span_rank(const Resolved& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.forest_degree; ++n) {
    cases.push_back([n]() -> std::optional<Fields> {
      const auto r = span_rank(static_cast<std::size_t>(n));
      return mismatch({{"degree", std::to_string(n)}}, std::to_string(r.rank), std::to_string(r.expected),
                      r.rank == r.expected);
    });
  }
  return cases;
}

std::vector<Case> build_cases(Identity id, const Resolved& b) {
  switch (id) {
    case Identity::coassociativity: return build_coassociativity(b);
    case Identity::antipode_axioms: return build_antipode(b);
    case Identity::coproduct_oracle: return build_coproduct_oracle(b);
    case Identity::star_laws: return build_laws(a1_words_up_to(b.word_length), b.word_length, star);
    case Identity::harub_laws: return build_laws(a1_words_up_to(b.word_length), b.word_length, harub);
    case Identity::diamond_laws:
      return build_laws(words_up_to(static_cast<std::size_t>(b.word_length)), b.word_length, diamond);
    case Identity::diamond_z_linear: return build_z_linear(b);
    case Identity::harmonic_alternating_sum: return build_alternating_sum(b);
    case Identity::d_transport: return build_d_transport(b);
    case Identity::phi_transport: return build_phi_transport(b);
    case Identity::diamond_letter_y: return build_letter_y(b);
    case Identity::u_multiplicative: return build_u_multiplicative(b);
    case Identity::u_recursion: return build_u_recursion(b);
    case Identity::pq_closed_forms: return build_pq_closed(b);
    case Identity::m_kills_u: return build_m_kills_u(b);
    case Identity::op_eq3: return build_op_eq3(b);
    case Identity::thm1: {
      auto cases = forest_word_grid(b, check_thm1);
      add_random(cases, b, check_thm1);
      return cases;
    }
    case Identity::thm2: {
      auto cases = forest_word_grid(b, check_thm2);
      add_random(cases, b, check_thm2);
      return cases;
    }
    case Identity::cor: return build_cor(b);
    case Identity::thm3: return forest_word_grid(b, check_thm3);
    case Identity::lem_z: return build_lem_z(b);
    case Identity::prop_key: return build_prop_key(b);
    case Identity::lem_pq: return build_lem_pq(b);
    case Identity::prop_B: return build_prop_b(b);
    case Identity::prop_FG0: return build_prop_fg0(b);
    case Identity::prop_FS: return build_prop_fs(b);
    case Identity::lem_tau: return build_lem_tau(b);
    case Identity::factor_order: return build_factor_order(b);
    case Identity::rtm_image: return build_rtm_image(b);
    case Identity::span_rank: return build_span_rank(b);
  }
  throw InternalError("unknown identity");
}

struct SweepResult {
  std::size_t first_failure;
  std::optional<Fields> counterexample;
};

// Evaluates cases on `jobs` threads; the reported failure is the one with the
// smallest index regardless of scheduling.
SweepResult run_sweep(const std::vector<Case>& cases, unsigned jobs) {
  const std::size_t none = cases.size();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::mutex mutex;
  std::optional<Fields> best_fields;
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      if (i > best.load()) break;
      auto bad = cases[i]();
      if (!bad) continue;
      std::lock_guard lock(mutex);
      if (i < best.load()) {
        best.store(i);
        best_fields = std::move(bad);
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return {best.load(), std::move(best_fields)};
}

}  // namespace

const std::vector<IdentityInfo>& identities() { return kIdentities; }

const IdentityInfo& identity_info(Identity id) {
  for (const auto& info : kIdentities) {
    if (info.id == id) return info;
  }
  throw InternalError("unknown identity");
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (const auto& info : kIdentities) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

VerificationReport verify_identity(Identity id, const Bounds& bounds) {
  const auto& info = identity_info(id);
  Resolved r{bounds.forest_degree >= 0 ? bounds.forest_degree : info.default_forest_degree,
             bounds.word_length >= 0 ? bounds.word_length : info.default_word_length,
             bounds.random_cases >= 0 ? bounds.random_cases : info.default_random_cases, bounds.seed};
  require_degree(static_cast<std::size_t>(r.forest_degree), std::string(info.name) + " forest degree");
  require_degree(static_cast<std::size_t>(r.word_length), std::string(info.name) + " word length");

  VerificationReport report;
  report.identity = std::string(info.name);
  if (info.uses_forests) report.bounds.emplace_back("max_forest_degree", r.forest_degree);
  if (info.uses_words) report.bounds.emplace_back("max_word_length", r.word_length);
  if (info.uses_random) {
    report.bounds.emplace_back("random_cases", r.random_cases);
    report.bounds.emplace_back("seed", static_cast<long long>(r.seed));
  }

  const auto start = std::chrono::steady_clock::now();
  const auto cases = build_cases(id, r);
  const auto result = run_sweep(cases, bounds.jobs);
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  report.passed = !result.counterexample.has_value();
  report.counterexample = result.counterexample;
  report.checked = report.passed ? cases.size() : result.first_failure + 1;
  return report;
}

}  // namespace ckrtm
