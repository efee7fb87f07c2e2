#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ckrtm/hopf.hpp"
#include "ckrtm/word.hpp"

namespace ckrtm::mzv {

using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kDefaultTerms = 96;
inline constexpr double kDefaultTolerance = 1e-8;

/// Multiple zeta index (k₁,…,k_r) for Σ_{0<n₁<⋯<n_r} Π n_i^{-k_i}.
class Index {
 public:
  Index() = default;
  /// PreconditionError if a part is < 1.
  explicit Index(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;
  std::size_t depth() const noexcept { return parts_.size(); }
  /// k_r >= 2 (the series converges).
  bool admissible() const noexcept { return !parts_.empty() && parts_.back() >= 2; }

  friend bool operator==(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// "(1,2)", "1,2" or "1 2". Throws ParseError.
Index parse_index(std::string_view text);
std::string render(const Index& i);

/// yx^{k₁-1}⋯yx^{k_r-1} ↦ (k₁,…,k_r). DomainError for w ∉ yA. Words outside
/// yAx give non-admissible indices.
Index word_index(const Word& w);
/// Inverse of word_index; non-admissible indices are converted as well and
/// can be detected with Index::admissible().
Word index_word(const Index& i);

struct RtmSource {
  ForestSum forest;
  Word seed;
};
struct DualitySource {
  Word word;
};
using Provenance = std::variant<RtmSource, DualitySource>;

/// A polynomial in admissible words claimed to vanish under ζ.
struct Relation {
  WordSum lhs;
  Provenance provenance;
};

/// lhs = f̃(w). Requires ε(f) = 0 and w ∈ yAx.
Relation relation_from_rtm(const ForestSum& f, const Word& w);
/// lhs = w - τ(w). Requires w ∈ yAx.
Relation duality_relation(const Word& w);

/// ζ(i) by Hölder convolution at 1/2: the word is read as an iterated integral
/// of ω_y = dt/(1-t), ω_x = dt/t from 0 to 1, split at 1/2; the upper half is
/// mapped back by t ↦ 1-t, which turns the suffix into its τ-image. Each half
/// is a power series at 1/2 truncated after `terms` coefficients.
/// PreconditionError for non-admissible indices or terms < 16.
Real zeta_numeric(const Index& i, int terms = kDefaultTerms);

struct TruncatedZeta {
  long double value;
  long double tail_bound;
};

/// Partial sum over n_r <= cutoff with a rigorous bound on the remainder:
/// ζ(i) ∈ [value, value + tail_bound] up to rounding. Requires cutoff >= 10.
TruncatedZeta zeta_truncated(const Index& i, long cutoff);

struct NumericCheck {
  bool passed;
  Real residual;
};

/// Σ c_w ζ(word_index(w)) summed in canonical term order; passes when |Σ| < tol.
NumericCheck verify_relation_numeric(const Relation& r, double tol = kDefaultTolerance,
                                     int terms = kDefaultTerms);

/// Formats a Real with `digits` significant digits.
std::string format_real(const Real& value, int digits = 30);

}  // namespace ckrtm::mzv
