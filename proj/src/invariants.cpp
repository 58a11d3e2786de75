#include "braid/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "braid/errors.hpp"
#include "braid/temperley_lieb.hpp"

namespace braid {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0U);
    sets_ = parent_.size();
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --sets_;
    }
  }

  [[nodiscard]] std::size_t sets() const { return sets_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t sets_ = 0;
};

constexpr std::size_t kStateSumHardLimit = 30;

}  // namespace

LaurentPoly bracket_state_sum(const BraidWord& b, SmoothingConvention convention) {
  const std::size_t c = b.length();
  if (c > kStateSumHardLimit) {
    throw DomainError("state sum over 2^" + std::to_string(c) + " states refused; use the TL route");
  }
  const auto n = static_cast<std::uint32_t>(b.strands());
  const auto cut = static_cast<std::uint32_t>(c);
  // Segment (position p, level l) is node l*n + p. The closure identifies
  // level c with level 0.
  auto node = [&](std::uint32_t p, std::uint32_t l) { return (l == cut ? 0U : l) * n + p; };

  DisjointSets sets(static_cast<std::size_t>(n) * std::max<std::size_t>(c, 1));
  // histogram[(a exponent, loops)] = number of states
  std::map<std::pair<int, std::size_t>, std::int64_t> histogram;
  const std::uint64_t states = std::uint64_t{1} << c;

  for (std::uint64_t mask = 0; mask < states; ++mask) {
    sets.reset();
    int a_exponent = 0;
    for (std::uint32_t l = 0; l < c; ++l) {
      const Letter& letter = b.letters()[l];
      const auto i = static_cast<std::uint32_t>(letter.index - 1);
      const bool straight = ((mask >> l) & 1U) == 0;
      for (std::uint32_t p = 0; p < n; ++p) {
        if (p != i && p != i + 1) sets.unite(node(p, l), node(p, l + 1));
      }
      if (straight) {
        sets.unite(node(i, l), node(i, l + 1));
        sets.unite(node(i + 1, l), node(i + 1, l + 1));
      } else {
        sets.unite(node(i, l), node(i + 1, l));
        sets.unite(node(i, l + 1), node(i + 1, l + 1));
      }
      const bool straight_gets_a = convention == SmoothingConvention::kStraightIsA;
      const bool gets_a = (straight == straight_gets_a) == (letter.sign > 0);
      a_exponent += gets_a ? 1 : -1;
    }
    const std::size_t loops = sets.sets();
    ++histogram[{a_exponent, loops}];
  }

  const LaurentPoly delta = tl_delta();
  LaurentPoly total;
  for (const auto& [key, count] : histogram) {
    const auto [exponent, loops] = key;
    total += LaurentPoly::monomial(count, exponent) * lp_pow(delta, static_cast<int>(loops) - 1);
  }
  return total;
}

int writhe(const BraidWord& b) { return degree(b); }

int components(const BraidWord& b) { return permutation(b).cycle_count(); }

PolynomialReport report(const BraidWord& b) {
  PolynomialReport r;
  r.bracket = b.length() <= kStateSumCrossingLimit ? bracket_state_sum(b) : bracket_via_tl(b);
  r.writhe = writhe(b);
  // (-a^3)^-w = (-1)^w a^-3w
  const LaurentPoly correction = LaurentPoly::monomial(r.writhe % 2 == 0 ? 1 : -1, -3 * r.writhe);
  r.f = correction * r.bracket;
  r.jones_q = lp_substitute_power(r.f, -1);
  r.components = components(b);
  return r;
}

std::string jones_display(const LaurentPoly& jones_q) {
  bool by4 = true;
  bool by2 = true;
  for (const auto& [e, c] : jones_q.terms()) {
    by4 = by4 && e % 4 == 0;
    by2 = by2 && e % 2 == 0;
  }
  auto shrink = [&](int k) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : jones_q.terms()) t.emplace(e / k, c);
    return LaurentPoly(std::move(t));
  };
  if (by4) return to_string(shrink(4), "t");
  if (by2) return to_string(shrink(2), "sqrt(t)");
  return to_string(jones_q, "q");
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g) {
  const int n = std::max(b.strands(), g.strands());
  const BraidWord gi = include(g, n);
  return multiply(multiply(inverse(gi), include(b, n)), gi);
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  const int n = b.strands();
  return multiply(include(b, n + 1), BraidWord(n + 1, {Letter{n, sign}}));
}

FuzzReport fuzz_markov(int n_max, std::size_t len_max, std::size_t trials, std::uint64_t seed, MarkovFault fault) {
  if (n_max < 1) throw DomainError("fuzz_markov needs n_max >= 1");
  std::mt19937_64 rng(seed);
  FuzzReport out;
  auto invariant = [&](const BraidWord& b) {
    const PolynomialReport r = report(b);
    return fault == MarkovFault::kSkipWritheCorrection ? r.bracket : r.f;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
    const std::size_t len = n == 1 ? 0 : static_cast<std::size_t>(rng() % (len_max + 1));
    const BraidWord b = random_braid(n, len, rng);
    BraidWord moved;
    std::string move;
    const auto kind = rng() % 3;
    if (kind == 0 && n > 1) {
      const BraidWord g = random_braid(n, static_cast<std::size_t>(rng() % (len_max + 1)), rng);
      moved = markov_conjugate(b, g);
      move = "conjugate by " + to_string(g);
    } else {
      const int sign = (rng() & 1U) != 0 ? 1 : -1;
      moved = markov_stabilize(b, sign);
      move = sign > 0 ? "stabilize +" : "stabilize -";
    }
    ++out.trials;
    if (invariant(b) != invariant(moved)) {
      ++out.violations;
      if (!out.first_counterexample) out.first_counterexample = to_string(b) + " under " + move;
    }
  }
  return out;
}

}  // namespace braid
