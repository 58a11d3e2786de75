#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/free_group.hpp"
#include "braid/fuzz_report.hpp"

namespace braid {

enum class OrderResult { Less, Equal, Greater };

/// "LT", "EQ" or "GT".
std::string to_string(OrderResult r);

// ---------------------------------------------------------------------------
// Dehornoy order

/// Sign of the lowest generator in this spelling: +1 if it occurs only
/// positively, -1 if only negatively, nullopt if mixed or the word is empty.
/// A nullopt says nothing about the braid itself.
std::optional<int> is_sigma_positive(const BraidWord& b);

struct HandleReductionOptions {
  std::size_t budget = 1'000'000;
  /// Called after every rewrite with the word before and after it.
  std::function<void(const BraidWord&, const BraidWord&)> on_step;
};

/// Dehornoy handle reduction. A handle is s_i^e v s_i^-e with every letter
/// of v above s_i; the innermost one is rewritten by dropping its ends and
/// replacing each s_{i+1}^d in v with s_{i+1}^-e s_i^d s_{i+1}^e. The result
/// is handle free, hence empty, sigma-positive or sigma-negative. Throws
/// BudgetExceeded after options.budget rewrites.
BraidWord handle_reduce(const BraidWord& b, const HandleReductionOptions& options = {});

/// a < b iff b a^-1 is sigma-positive.
OrderResult dehornoy_compare(const BraidWord& a, const BraidWord& b, const HandleReductionOptions& options = {});

// ---------------------------------------------------------------------------
// Magnus expansion and the bi-order on free groups and pure braids

/// Monomial X_{w[0]} X_{w[1]} ... in non-commuting variables (1-based).
using Monomial = std::vector<std::uint8_t>;

/// Shorter monomials first, then lexicographic on subscripts.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer power series in X_1..X_rank truncated above degree max_degree.
class NCSeries {
 public:
  using Terms = std::map<Monomial, std::int64_t, GradedLex>;

  NCSeries(int rank, int max_degree);
  NCSeries(int rank, int max_degree, Terms terms);
  static NCSeries one(int rank, int max_degree);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::int64_t coeff(const Monomial& m) const;

  /// Right multiplication by mu(x_i^sign).
  void multiply_by_letter(const Letter& l, std::size_t max_terms);

  friend bool operator==(const NCSeries&, const NCSeries&) = default;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  int rank_;
  int max_degree_;
  Terms terms_;
};

std::string to_string(const NCSeries& s);

struct MagnusOptions {
  /// Largest truncation degree tried by free_compare.
  int max_degree = 16;
  /// Refuse to hold more terms than this in any series.
  std::size_t max_terms = 4'000'000;
};

/// mu(x_i) = 1 + X_i, mu(x_i^-1) = 1 - X_i + X_i^2 - ..., truncated at D.
NCSeries magnus_expand(const FreeWord& w, int max_degree, const MagnusOptions& options = {});

/// Compares coefficients at the first monomial (graded-lex) where the series
/// differ, up to the smaller of the two truncation degrees.
OrderResult series_compare(const NCSeries& s, const NCSeries& t);

/// Magnus order on a free group. Expands at D = 2, 4, 8, ... up to
/// options.max_degree; throws BudgetExceeded if distinct words still agree.
OrderResult free_compare(const FreeWord& u, const FreeWord& v, const MagnusOptions& options = {});

/// Bi-order on P_n: Artin coordinates compared lexicographically, beta_1
/// first, each by free_compare. Throws DomainError for non-pure input or
/// different strand counts.
OrderResult pure_compare(const BraidWord& a, const BraidWord& b, const MagnusOptions& options = {});

/// Samples the order axioms: Dehornoy trichotomy, cone closure and right
/// invariance on B_n, and bi-invariance of pure_compare on P_n.
FuzzReport fuzz_order(int n_max, std::size_t len_max, std::size_t trials, std::uint64_t seed,
                      const HandleReductionOptions& handles = {}, const MagnusOptions& magnus = {});

}  // namespace braid
