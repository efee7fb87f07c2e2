#pragma once

// Test-side reference implementations. None of these call into the library's
// algorithms; they only share the value types for comparison.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ckrtm/word.hpp"

namespace oracle {

using Composition = std::vector<int>;

/// Rooted unlabelled trees with n vertices (OEIS A000081) by the classical
/// divisor-sum recurrence.
inline std::vector<long long> rooted_tree_counts(int max_n) {
  std::vector<long long> a(max_n + 2, 0);
  a[1] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
      long long s = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * a[d];
      }
      total += s * a[n - k + 1];
    }
    a[n + 1] = total / n;
  }
  return a;
}

/// Word in yA split into exponents: y x^{k₁-1} ⋯ y x^{k_r-1} ↦ (k₁,…,k_r).
inline Composition blocks(const std::string& w) {
  Composition out;
  for (char c : w) {
    if (c == 'y') {
      out.push_back(1);
    } else {
      out.back() += 1;
    }
  }
  return out;
}

inline std::string word_of(const Composition& k) {
  std::string w;
  for (int part : k) w += "y" + std::string(part - 1, 'x');
  return w;
}

/// Quasi-shuffle by brute force over pairs of strictly increasing maps
/// a: [r] → [N], b: [s] → [N] whose images cover [N]. A slot hit by both
/// sequences merges the two parts and contributes `merge_sign`.
inline std::map<Composition, long> quasi_shuffle(const Composition& a, const Composition& b, int merge_sign) {
  std::map<Composition, long> out;
  const int r = static_cast<int>(a.size());
  const int s = static_cast<int>(b.size());
  for (int n = std::max(r, s); n <= r + s; ++n) {
    for (unsigned ma = 0; ma < (1U << n); ++ma) {
      if (__builtin_popcount(ma) != r) continue;
      for (unsigned mb = 0; mb < (1U << n); ++mb) {
        if (__builtin_popcount(mb) != s || (ma | mb) != (1U << n) - 1) continue;
        Composition word(n, 0);
        long sign = 1;
        int ia = 0, ib = 0;
        for (int j = 0; j < n; ++j) {
          if (ma >> j & 1U) word[j] += a[ia++];
          if (mb >> j & 1U) word[j] += b[ib++];
          if ((ma >> j & 1U) && (mb >> j & 1U)) sign *= merge_sign;
        }
        out[word] += sign;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Lifts the composition oracle to words in A¹ (the empty word is the unit).
inline ckrtm::WordSum quasi_shuffle_words(const std::string& a, const std::string& b, int merge_sign) {
  ckrtm::WordSum out;
  for (const auto& [k, c] : quasi_shuffle(blocks(a), blocks(b), merge_sign)) {
    out.add(ckrtm::Word(word_of(k)), c);
  }
  return out;
}

/// Truncated nested sum Σ_{0<n₁<⋯<n_r<=m} Π n_i^{-k_i}, exact.
inline mpq_class nested_sum(const Composition& k, int m) {
  if (k.empty()) return 1;
  // Dynamic programming over the last summation variable.
  std::vector<mpq_class> level(m + 1, 0);  // level[n] = sum with n_i = n
  for (int n = 1; n <= m; ++n) {
    mpq_class p = 1;
    for (int e = 0; e < k[0]; ++e) p /= n;
    level[n] = p;
  }
  for (std::size_t i = 1; i < k.size(); ++i) {
    std::vector<mpq_class> next(m + 1, 0);
    mpq_class running = 0;
    for (int n = 1; n <= m; ++n) {
      mpq_class p = 1;
      for (int e = 0; e < k[i]; ++e) p /= n;
      next[n] = running * p;
      running += level[n];
    }
    level = std::move(next);
  }
  mpq_class total = 0;
  for (int n = 1; n <= m; ++n) total += level[n];
  return total;
}

}  // namespace oracle
