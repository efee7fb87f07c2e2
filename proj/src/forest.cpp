#include "ckrtm/forest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "ckrtm/error.hpp"
#include "ckrtm/limits.hpp"

namespace ckrtm {

namespace {

std::strong_ordering compare_codes(const std::string& a, const std::string& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.compare(b) <=> 0;
}

// Splits a concatenation of balanced bracket codes into its top-level parts.
std::vector<Tree> split_top_level(std::string_view code) {
  std::vector<Tree> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    depth += code[i] == '[' ? 1 : -1;
    if (depth == 0) {
      out.push_back(Tree::from_canonical(std::string(code.substr(start, i + 1 - start))));
      start = i + 1;
    }
  }
  return out;
}

std::string join_sorted(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end());
  std::string code;
  for (const auto& t : trees) code += t.code();
  return code;
}

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  Forest parse_all() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'I') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) throw ParseError("unexpected character after I", pos_);
      return Forest();
    }
    Forest f = parse_forest();
    if (pos_ != text_.size()) {
      throw ParseError(text_[pos_] == ']' ? "unbalanced ']'" : "unexpected character", pos_);
    }
    return f;
  }

 private:
  Forest parse_forest() {
    std::vector<Tree> trees;
    for (skip_ws(); pos_ < text_.size() && text_[pos_] == '['; skip_ws()) trees.push_back(parse_tree());
    return Forest(std::move(trees));
  }

  Tree parse_tree() {
    std::size_t open = pos_++;
    Forest children = parse_forest();
    if (pos_ >= text_.size()) throw ParseError("unbalanced '[' opened", open);
    if (text_[pos_] != ']') throw ParseError("unexpected character", pos_);
    ++pos_;
    return Tree::graft(children);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::mutex g_enum_mutex;
std::map<std::size_t, std::vector<Forest>> g_forests;
std::map<std::size_t, std::vector<Tree>> g_trees;

void multisets(const std::vector<Tree>& pool, std::size_t start, std::size_t remaining,
               std::vector<Tree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].degree() > remaining) continue;
    current.push_back(pool[i]);
    multisets(pool, i, remaining - pool[i].degree(), current, out);
    current.pop_back();
  }
}

}  // namespace

Tree::Tree() : code_("[]") {}

Tree Tree::graft(const Forest& f) { return Tree("[" + f.code() + "]"); }

Tree Tree::from_canonical(std::string code) { return Tree(std::move(code)); }

Forest Tree::children() const {
  return Forest(split_top_level(std::string_view(code_).substr(1, code_.size() - 2)));
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return compare_codes(a.code_, b.code_); }

Forest::Forest(std::vector<Tree> trees) : code_(join_sorted(std::move(trees))) {}

bool Forest::is_tree() const {
  if (code_.empty()) return false;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < code_.size(); ++i) {
    depth += code_[i] == '[' ? 1 : -1;
    if (depth == 0) return false;
  }
  return true;
}

std::vector<Tree> Forest::trees() const { return split_top_level(code_); }

Forest operator*(const Forest& a, const Forest& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  auto trees = a.trees();
  auto more = b.trees();
  trees.insert(trees.end(), more.begin(), more.end());
  return Forest(std::move(trees));
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) { return compare_codes(a.code_, b.code_); }

std::string render(const Forest& f) { return f.code(); }

std::string render_forest_label(const Forest& f) { return f.is_unit() ? "I" : f.code(); }

Forest parse_forest(std::string_view text) { return ForestParser(text).parse_all(); }

Tree parse_tree(std::string_view text) {
  Forest f = parse_forest(text);
  if (!f.is_tree()) throw ParseError("expected exactly one tree", 0);
  return f.trees().front();
}

const std::vector<Forest>& enumerate_forests(std::size_t n) {
  require_degree(n, "enumerate_forests");
  {
    std::lock_guard lock(g_enum_mutex);
    if (auto it = g_forests.find(n); it != g_forests.end()) return it->second;
  }
  std::vector<Tree> pool;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& level = enumerate_trees(k);
    pool.insert(pool.end(), level.begin(), level.end());
  }
  std::vector<Forest> out;
  std::vector<Tree> current;
  multisets(pool, 0, n, current, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::lock_guard lock(g_enum_mutex);
  return g_forests.try_emplace(n, std::move(out)).first->second;
}

const std::vector<Tree>& enumerate_trees(std::size_t n) {
  require_degree(n, "enumerate_trees");
  {
    std::lock_guard lock(g_enum_mutex);
    if (auto it = g_trees.find(n); it != g_trees.end()) return it->second;
  }
  std::vector<Tree> out;
  if (n >= 1) {
    for (const auto& f : enumerate_forests(n - 1)) out.push_back(Tree::graft(f));
  }
  std::sort(out.begin(), out.end());
  std::lock_guard lock(g_enum_mutex);
  return g_trees.try_emplace(n, std::move(out)).first->second;
}

Tree ladder(std::size_t n) {
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t = Tree::graft(t);
  return t;
}

Tree corolla(std::size_t leaves) { return Tree::graft(Forest(std::vector<Tree>(leaves, Tree()))); }

}  // namespace ckrtm
