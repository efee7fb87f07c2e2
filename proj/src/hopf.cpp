#include "ckrtm/hopf.hpp"

#include <cstdint>
#include <functional>
#include <tuple>

#include "ckrtm/memo.hpp"
#include "ckrtm/render_terms.hpp"

namespace ckrtm {

namespace {

MemoTable<Tree, ForestTensorSum> g_tree_coproduct;
MemoTable<Tree, ForestSum> g_tree_antipode;

ForestTensorSum unit_tensor() { return ForestTensorSum({Forest(), Forest()}); }

ForestTensorSum tree_coproduct(const Tree& t) {
  return g_tree_coproduct.get_or_compute(t, [&] {
    ForestTensorSum out({Forest(), Forest(t)});
    for (const auto& [pair, c] : coproduct(t.children())) {
      out.add({Forest(Tree::graft(pair.first)), pair.second}, c);
    }
    return out;
  });
}

ForestSum tree_antipode(const Tree& t) {
  return g_tree_antipode.get_or_compute(t, [&] {
    ForestSum out;
    for (const auto& [pair, c] : tree_coproduct(t)) {
      if (pair.first.is_unit()) continue;
      out.add_scaled(multiply(ForestSum(pair.first), antipode(pair.second)), -c);
    }
    return out;
  });
}

// Labelled copy of a canonical tree: vertex 0 is the root, parent[v] < v.
struct LabelledTree {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
};

LabelledTree label(const Tree& t) {
  LabelledTree lt;
  std::vector<int> stack;
  for (char ch : t.code()) {
    if (ch == '[') {
      int v = static_cast<int>(lt.parent.size());
      int p = stack.empty() ? -1 : stack.back();
      lt.parent.push_back(p);
      lt.children.emplace_back();
      if (p >= 0) lt.children[p].push_back(v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return lt;
}

// Canonical tree spanned by the vertices of `mask` reachable from v.
Tree induced_tree(const LabelledTree& lt, int v, std::uint64_t mask) {
  std::vector<Tree> kids;
  for (int c : lt.children[v]) {
    if (mask >> c & 1U) kids.push_back(induced_tree(lt, c, mask));
  }
  return Tree::graft(Forest(std::move(kids)));
}

Tree full_subtree(const LabelledTree& lt, int v) { return induced_tree(lt, v, ~std::uint64_t{0}); }

}  // namespace

ForestSum multiply(const ForestSum& a, const ForestSum& b) {
  return extend_bilinearly<Forest>(a, b, [](const Forest& f, const Forest& g) { return ForestSum(f * g); });
}

ForestTensorSum multiply(const ForestTensorSum& a, const ForestTensorSum& b) {
  return extend_bilinearly<ForestPair>(a, b, [](const ForestPair& p, const ForestPair& q) {
    return ForestTensorSum({p.first * q.first, p.second * q.second});
  });
}

Rational counit(const Forest& f) { return f.is_unit() ? 1 : 0; }

Rational counit(const ForestSum& s) { return s.coefficient(Forest()); }

ForestTensorSum coproduct(const Forest& f) {
  ForestTensorSum out = unit_tensor();
  for (const auto& t : f.trees()) out = multiply(out, tree_coproduct(t));
  return out;
}

ForestTensorSum coproduct(const ForestSum& s) {
  return extend_linearly<ForestPair>(s, [](const Forest& f) { return coproduct(f); });
}

ForestTensorSum coproduct_oracle(const Tree& t) {
  const LabelledTree lt = label(t);
  const int n = static_cast<int>(lt.parent.size());
  ForestTensorSum out({Forest(), Forest(t)});
  // Every subset containing the root whose members all have their parent inside.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool connected = true;
    for (int v = 1; v < n && connected; ++v) {
      if ((mask >> v & 1U) && !(mask >> lt.parent[v] & 1U)) connected = false;
    }
    if (!connected) continue;
    std::vector<Tree> rest;
    for (int v = 1; v < n; ++v) {
      if (!(mask >> v & 1U) && (mask >> lt.parent[v] & 1U)) rest.push_back(full_subtree(lt, v));
    }
    out.add({Forest(induced_tree(lt, 0, mask)), Forest(std::move(rest))}, 1);
  }
  return out;
}

ForestSum antipode(const Forest& f) {
  ForestSum out{Forest()};
  for (const auto& t : f.trees()) out = multiply(out, tree_antipode(t));
  return out;
}

ForestSum antipode(const ForestSum& s) {
  return extend_linearly<Forest>(s, [](const Forest& f) { return antipode(f); });
}

LinearCombination<std::tuple<Forest, Forest, Forest>> coproduct_left(const ForestTensorSum& t) {
  LinearCombination<std::tuple<Forest, Forest, Forest>> out;
  for (const auto& [pair, c] : t) {
    for (const auto& [inner, d] : coproduct(pair.first)) out.add({inner.first, inner.second, pair.second}, c * d);
  }
  return out;
}

LinearCombination<std::tuple<Forest, Forest, Forest>> coproduct_right(const ForestTensorSum& t) {
  LinearCombination<std::tuple<Forest, Forest, Forest>> out;
  for (const auto& [pair, c] : t) {
    for (const auto& [inner, d] : coproduct(pair.second)) out.add({pair.first, inner.first, inner.second}, c * d);
  }
  return out;
}

ForestSum antipode_left_convolution(const ForestTensorSum& t) {
  ForestSum out;
  for (const auto& [pair, c] : t) out.add_scaled(multiply(antipode(pair.first), ForestSum(pair.second)), c);
  return out;
}

ForestSum antipode_right_convolution(const ForestTensorSum& t) {
  ForestSum out;
  for (const auto& [pair, c] : t) out.add_scaled(multiply(ForestSum(pair.first), antipode(pair.second)), c);
  return out;
}


std::string render(const ForestSum& s) { return detail::render_terms(s, render_forest_label); }

std::string render(const ForestTensorSum& s) {
  return detail::render_terms(s, [](const ForestPair& p) {
    return render_forest_label(p.first) + " (x) " + render_forest_label(p.second);
  });
}

}  // namespace ckrtm
