#include <random>

#include "braid/errors.hpp"
#include "braid/free_group.hpp"
#include "braid/ordering.hpp"

namespace braid {

namespace {

OrderResult flip(OrderResult r) {
  if (r == OrderResult::Less) return OrderResult::Greater;
  if (r == OrderResult::Greater) return OrderResult::Less;
  return r;
}

}  // namespace

FuzzReport fuzz_order(int n_max, std::size_t len_max, std::size_t trials, std::uint64_t seed,
                      const HandleReductionOptions& handles, const MagnusOptions& magnus) {
  if (n_max < 2) throw DomainError("fuzz_order needs n_max >= 2");
  std::mt19937_64 rng(seed);
  FuzzReport out;
  auto fail = [&](const std::string& what) {
    ++out.violations;
    if (!out.first_counterexample) out.first_counterexample = what;
  };
  const BraidWord one;
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
    auto sample = [&] { return random_braid(n, static_cast<std::size_t>(rng() % (len_max + 1)), rng); };
    const BraidWord g = sample();
    const BraidWord h = sample();
    const BraidWord c = sample();
    const BraidWord id(n);

    const OrderResult g_vs_one = dehornoy_compare(id, g, handles);
    if ((g_vs_one == OrderResult::Equal) != is_identity(g)) fail("trichotomy: " + to_string(g));
    if (dehornoy_compare(g, id, handles) != flip(g_vs_one)) fail("antisymmetry: " + to_string(g));

    if (g_vs_one == OrderResult::Less && dehornoy_compare(id, h, handles) == OrderResult::Less &&
        dehornoy_compare(id, g * h, handles) != OrderResult::Less) {
      fail("cone closure: " + to_string(g) + " , " + to_string(h));
    }
    if (dehornoy_compare(g, h, handles) != dehornoy_compare(g * c, h * c, handles)) {
      fail("right invariance: " + to_string(g) + " , " + to_string(h) + " , " + to_string(c));
    }

    const BraidWord a = random_pure_braid(n, len_max, rng);
    const BraidWord b = random_pure_braid(n, len_max, rng);
    const BraidWord p = random_pure_braid(n, len_max, rng);
    const OrderResult ab = pure_compare(a, b, magnus);
    if ((ab == OrderResult::Equal) != braid_equal(a, b)) fail("pure trichotomy: " + to_string(a) + " , " + to_string(b));
    if (pure_compare(p * a, p * b, magnus) != ab || pure_compare(a * p, b * p, magnus) != ab) {
      fail("pure bi-invariance: " + to_string(a) + " , " + to_string(b) + " , " + to_string(p));
    }
  }
  return out;
}

}  // namespace braid
