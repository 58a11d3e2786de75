#include <gtest/gtest.h>

#include <random>

#include "braid/errors.hpp"
#include "braid/free_group.hpp"
#include "braid/ordering.hpp"
#include "support.hpp"

using namespace braid;

namespace {

FreeWord fw(int rank, std::initializer_list<int> v) { return FreeWord::from_signed(rank, v); }
BraidWord w(int n, std::initializer_list<int> v) { return BraidWord::from_signed(n, v); }

FreeWord random_free(int rank, std::size_t len, std::mt19937_64& rng) {
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < len; ++k) {
    letters.push_back({1 + static_cast<int>(rng() % rank), (rng() & 1) ? 1 : -1});
  }
  return free_reduce(FreeWord(rank, letters));
}

}  // namespace

TEST(Magnus, GeneratorExpansions) {
  const NCSeries x1 = magnus_expand(fw(1, {1}), 3);
  EXPECT_EQ(x1, NCSeries(1, 3, {{{}, 1}, {{1}, 1}}));
  EXPECT_EQ(to_string(magnus_expand(fw(1, {1}), 1)), "1 + X1 + O(2)");
  const NCSeries xi = magnus_expand(fw(1, {-1}), 3);
  EXPECT_EQ(xi, NCSeries(1, 3, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}, {{1, 1, 1}, -1}}));
  EXPECT_EQ(to_string(xi), "1 - X1 + X1X1 - X1X1X1 + O(4)");
}

TEST(Magnus, CommutatorExpansion) {
  const NCSeries c = magnus_expand(fw(2, {1, 2, -1, -2}), 2);
  EXPECT_EQ(to_string(c), "1 + X1X2 - X2X1 + O(3)");
}

TEST(Magnus, HandExpansionOfConjugate) {
  // (1 + X2)(1 + X1)(1 - X2 + X2^2) through degree 2.
  const NCSeries s = magnus_expand(fw(2, {2, 1, -2}), 2);
  EXPECT_EQ(s, NCSeries(2, 2, {{{}, 1}, {{1}, 1}, {{2, 1}, 1}, {{1, 2}, -1}}));
}

TEST(Magnus, MultiplicativeUnderTruncation) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const FreeWord u = random_free(2, rng() % 6, rng), v = random_free(2, rng() % 6, rng);
    const NCSeries su = magnus_expand(u, 4), sv = magnus_expand(v, 4);
    // Independent truncated product of the two series.
    NCSeries::Terms prod;
    for (const auto& [m1, c1] : su.terms()) {
      for (const auto& [m2, c2] : sv.terms()) {
        if (m1.size() + m2.size() > 4) continue;
        Monomial m = m1;
        m.insert(m.end(), m2.begin(), m2.end());
        prod[m] += c1 * c2;
      }
    }
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(magnus_expand(u * v, 4).terms(), prod);
  }
}

TEST(Magnus, Errors) {
  EXPECT_THROW(NCSeries(1, 2, {{{2}, 1}}), RangeError);
  EXPECT_THROW(NCSeries(1, 1, {{{1, 1}, 1}}), DomainError);
  MagnusOptions tiny;
  tiny.max_terms = 3;
  EXPECT_THROW(magnus_expand(fw(2, {1, 2, -1, -2}), 6, tiny), BudgetExceeded);
}

TEST(SeriesCompare, Examples) {
  const NCSeries one = magnus_expand(FreeWord(2), 2);
  const NCSeries comm = magnus_expand(fw(2, {1, 2, -1, -2}), 2);
  EXPECT_EQ(series_compare(one, comm), OrderResult::Less);
  EXPECT_EQ(series_compare(comm, comm), OrderResult::Equal);
  EXPECT_EQ(series_compare(magnus_expand(fw(2, {2, 1, -2}), 2), magnus_expand(fw(2, {1}), 2)), OrderResult::Less);
}

TEST(FreeCompare, ConjugationChain) {
  EXPECT_EQ(free_compare(fw(2, {2, 1, -2}), fw(2, {1})), OrderResult::Less);
  EXPECT_EQ(free_compare(fw(2, {1}), fw(2, {-2, 1, 2})), OrderResult::Less);
  EXPECT_EQ(free_compare(fw(2, {2, 1, -2}), fw(2, {-2, 1, 2})), OrderResult::Less);
}

TEST(FreeCompare, Examples) {
  const FreeWord u = fw(3, {1, -3, 2});
  EXPECT_EQ(free_compare(u, u), OrderResult::Equal);
  EXPECT_EQ(free_compare(FreeWord(1), fw(1, {1})), OrderResult::Less);
  EXPECT_EQ(free_compare(FreeWord(2), fw(2, {1, 2, -1, -2})), OrderResult::Less);
  EXPECT_THROW(free_compare(FreeWord(1), FreeWord(2)), DomainError);
}

TEST(FreeCompare, DeepDifferenceNeedsHigherDegree) {
  // [[x1,x2],x1] is 1 through degree 2 and first differs in degree 3.
  const FreeWord c = fw(2, {1, 2, -1, -2});
  const FreeWord cc = c * fw(2, {1}) * inverse(c) * fw(2, {-1});
  EXPECT_EQ(series_compare(magnus_expand(cc, 2), magnus_expand(FreeWord(2), 2)), OrderResult::Equal);
  EXPECT_NE(free_compare(cc, FreeWord(2)), OrderResult::Equal);
  MagnusOptions shallow;
  shallow.max_degree = 2;
  EXPECT_THROW(free_compare(cc, FreeWord(2), shallow), BudgetExceeded);
}

TEST(FreeCompare, BiInvariantAndConjugationInvariant) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const FreeWord u = random_free(3, rng() % 6, rng), v = random_free(3, rng() % 6, rng);
    const FreeWord c = random_free(3, rng() % 4, rng);
    const OrderResult r = free_compare(u, v);
    EXPECT_EQ(free_compare(c * u, c * v), r);
    EXPECT_EQ(free_compare(u * c, v * c), r);
    EXPECT_EQ(free_compare(c * u * inverse(c), c * v * inverse(c)), r);
    EXPECT_EQ(free_compare(v, u) == OrderResult::Less, r == OrderResult::Greater);
  }
}

TEST(PureCompare, Examples) {
  EXPECT_EQ(pure_compare(BraidWord(2), w(2, {1, 1})), OrderResult::Less);
  const BraidWord a = pure_generator(1, 3, 4);
  EXPECT_EQ(pure_compare(a, a), OrderResult::Equal);
  EXPECT_EQ(pure_compare(BraidWord(3), full_twist(3)), OrderResult::Less);
  EXPECT_THROW(pure_compare(w(2, {1}), w(2, {1})), DomainError);
}

TEST(PureCompare, EqualityMatchesWordProblem) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const BraidWord a = random_pure_braid(4, 10, rng);
    EXPECT_EQ(pure_compare(a, support::scramble(a, 15, rng)), OrderResult::Equal);
    const BraidWord b = random_pure_braid(4, 10, rng);
    EXPECT_EQ(pure_compare(a, b) == OrderResult::Equal, braid_equal(a, b));
  }
}

TEST(PureCompare, BiInvarianceAndRoots) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const BraidWord a = random_pure_braid(n, 8, rng), b = random_pure_braid(n, 8, rng);
    const BraidWord c = random_pure_braid(n, 8, rng);
    const OrderResult r = pure_compare(a, b);
    EXPECT_EQ(pure_compare(c * a, c * b), r) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
    EXPECT_EQ(pure_compare(a * c, b * c), r);
    if (r == OrderResult::Less) EXPECT_EQ(pure_compare(a * a, b * b), OrderResult::Less);
  }
}

TEST(PureCompare, GarsidePositivePureBraidsExceedOne) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(pure_compare(BraidWord(n), full_twist(n)), OrderResult::Less);
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // sigma_{j-1}...sigma_{i+1} sigma_i^2 sigma_{i+1}...sigma_{j-1} is a positive pure word.
        std::vector<Letter> letters;
        for (int k = j - 1; k > i; --k) letters.push_back({k, 1});
        letters.push_back({i, 1});
        letters.push_back({i, 1});
        for (int k = i + 1; k < j; ++k) letters.push_back({k, 1});
        EXPECT_EQ(pure_compare(BraidWord(n), BraidWord(n, letters)), OrderResult::Less);
      }
    }
  }
}

TEST(Fuzz, OrderReport) {
  EXPECT_EQ(fuzz_order(4, 8, 0, 1).violations, 0U);
  const FuzzReport r = fuzz_order(4, 8, 200, 1);
  EXPECT_EQ(r.trials, 200U);
  EXPECT_EQ(r.violations, 0U);
}
