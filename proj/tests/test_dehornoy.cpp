#include <gtest/gtest.h>

#include <random>

#include "braid/errors.hpp"
#include "braid/free_group.hpp"
#include "braid/ordering.hpp"
#include "support.hpp"

using namespace braid;

namespace {

BraidWord w(int n, std::initializer_list<int> v) { return BraidWord::from_signed(n, v); }

BraidWord random_positive(int n, std::size_t len, std::mt19937_64& rng) {
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < len; ++k) letters.push_back({1 + static_cast<int>(rng() % (n - 1)), 1});
  return BraidWord(n, letters);
}

}  // namespace

TEST(SigmaPositive, Examples) {
  EXPECT_EQ(is_sigma_positive(w(3, {1, -2})), 1);
  EXPECT_EQ(is_sigma_positive(w(3, {2, -1})), -1);
  EXPECT_EQ(is_sigma_positive(w(3, {1, 2, -1})), std::nullopt);
  EXPECT_EQ(is_sigma_positive(BraidWord(3)), std::nullopt);
  EXPECT_EQ(is_sigma_positive(w(4, {3, -2, 3})), -1);
}

TEST(HandleReduce, Examples) {
  EXPECT_EQ(handle_reduce(w(3, {1, 2, -1})), w(3, {-2, 1, 2}));
  EXPECT_TRUE(handle_reduce(w(2, {1, -1})).empty());
  EXPECT_EQ(handle_reduce(w(4, {1, 3, 2, 2, 1})), w(4, {1, 3, 2, 2, 1}));
}

TEST(HandleReduce, ResultIsHandleFreeAndEquivalent) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    const BraidWord b = random_braid(2 + static_cast<int>(rng() % 4), rng() % 14, rng);
    const BraidWord r = handle_reduce(b);
    EXPECT_TRUE(braid_equal(r, b)) << to_string(b);
    EXPECT_EQ(r.empty() || is_sigma_positive(r).has_value(), true) << to_string(b) << " -> " << to_string(r);
  }
}

TEST(HandleReduce, EveryStepPreservesTheBraid) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const BraidWord b = random_braid(4, rng() % 10, rng);
    std::size_t steps = 0;
    HandleReductionOptions opts;
    opts.on_step = [&](const BraidWord& before, const BraidWord& after) {
      ++steps;
      EXPECT_TRUE(braid_equal(before, after)) << to_string(before) << " -> " << to_string(after);
    };
    handle_reduce(b, opts);
  }
}

TEST(HandleReduce, Budget) {
  HandleReductionOptions opts;
  opts.budget = 0;
  EXPECT_THROW(handle_reduce(w(3, {1, 2, -1}), opts), BudgetExceeded);
  EXPECT_NO_THROW(handle_reduce(w(3, {1, 2, 1}), opts));
}

TEST(Compare, Examples) {
  EXPECT_EQ(dehornoy_compare(BraidWord(2), w(2, {1})), OrderResult::Less);
  const BraidWord a = w(3, {1, -2, 1});
  EXPECT_EQ(dehornoy_compare(a, a), OrderResult::Equal);
  EXPECT_EQ(dehornoy_compare(w(3, {1, 2, 1}), w(3, {2, 1, 2})), OrderResult::Equal);
  EXPECT_EQ(to_string(OrderResult::Less), "LT");
  EXPECT_EQ(to_string(OrderResult::Equal), "EQ");
  EXPECT_EQ(to_string(OrderResult::Greater), "GT");
}

TEST(Compare, SmytheWitness) {
  const BraidWord x = w(3, {1, -2});
  const BraidWord y = w(3, {1, 2, 1});
  const BraidWord one(3);
  EXPECT_TRUE(braid_equal(y * x * inverse(y), inverse(x)));
  EXPECT_EQ(dehornoy_compare(x, one), OrderResult::Greater);
  EXPECT_EQ(dehornoy_compare(y * x * inverse(y), one), OrderResult::Less);
}

TEST(Compare, Trichotomy) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const BraidWord g = (k % 3 == 0) ? support::random_trivial_pure(n, 4, rng) : random_braid(n, rng() % 9, rng);
    const OrderResult r = dehornoy_compare(BraidWord(n), g);
    EXPECT_EQ(r == OrderResult::Equal, is_identity(g)) << to_string(g);
    const OrderResult s = dehornoy_compare(g, BraidWord(n));
    EXPECT_EQ(r == OrderResult::Less, s == OrderResult::Greater);
  }
}

TEST(Compare, ConeClosureAndRightInvariance) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const BraidWord one(n);
    const BraidWord g = random_braid(n, rng() % 9, rng);
    const BraidWord h = random_braid(n, rng() % 9, rng);
    const BraidWord c = random_braid(n, rng() % 9, rng);
    if (dehornoy_compare(one, g) == OrderResult::Less && dehornoy_compare(one, h) == OrderResult::Less) {
      EXPECT_EQ(dehornoy_compare(one, g * h), OrderResult::Less);
    }
    EXPECT_EQ(dehornoy_compare(g, h), dehornoy_compare(g * c, h * c));
  }
}

TEST(Compare, Transitive) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const BraidWord a = random_braid(3, rng() % 7, rng);
    const BraidWord b = random_braid(3, rng() % 7, rng);
    const BraidWord c = random_braid(3, rng() % 7, rng);
    if (dehornoy_compare(a, b) == OrderResult::Less && dehornoy_compare(b, c) == OrderResult::Less) {
      EXPECT_EQ(dehornoy_compare(a, c), OrderResult::Less);
    }
  }
}

TEST(Compare, GarsidePositiveWordsExceedOne) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const BraidWord p = random_positive(n, 1 + rng() % 10, rng);
    EXPECT_EQ(dehornoy_compare(BraidWord(n), p), OrderResult::Less) << to_string(p);
  }
}

TEST(Compare, NotLeftInvariant) {
  // Left multiplication by y flips the comparison of x with 1 (up to conjugating back).
  const BraidWord x = w(3, {1, -2});
  const BraidWord y = w(3, {1, 2, 1});
  EXPECT_NE(dehornoy_compare(y * x, y), dehornoy_compare(x, BraidWord(3)));
}
