#include <algorithm>

#include "braid/errors.hpp"
#include "braid/ordering.hpp"

namespace braid {

namespace {

struct Handle {
  std::size_t begin;
  std::size_t end;  // index of the closing letter
};

// The handle whose closing letter comes first. Nothing can nest inside it,
// since a nested handle would close earlier.
std::optional<Handle> first_closing_handle(const std::vector<Letter>& w) {
  for (std::size_t t = 1; t < w.size(); ++t) {
    const Letter& close = w[t];
    for (std::size_t k = t; k-- > 0;) {
      if (w[k].index > close.index) continue;
      if (w[k].index == close.index && w[k].sign == -close.sign) return Handle{k, t};
      break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(OrderResult r) {
  switch (r) {
    case OrderResult::Less:
      return "LT";
    case OrderResult::Equal:
      return "EQ";
    case OrderResult::Greater:
      return "GT";
  }
  return "??";
}

std::optional<int> is_sigma_positive(const BraidWord& b) {
  if (b.empty()) return std::nullopt;
  const int lowest =
      std::min_element(b.letters().begin(), b.letters().end(), [](const Letter& x, const Letter& y) {
        return x.index < y.index;
      })->index;
  bool pos = false;
  bool neg = false;
  for (const auto& l : b.letters()) {
    if (l.index != lowest) continue;
    (l.sign > 0 ? pos : neg) = true;
  }
  if (pos && neg) return std::nullopt;
  return pos ? 1 : -1;
}

BraidWord handle_reduce(const BraidWord& b, const HandleReductionOptions& options) {
  std::vector<Letter> w = b.letters();
  const int n = b.strands();
  std::size_t steps = 0;
  while (const auto h = first_closing_handle(w)) {
    if (steps++ >= options.budget) {
      throw BudgetExceeded("handle reduction exceeded " + std::to_string(options.budget) + " rewrites");
    }
    const int i = w[h->begin].index;
    const int e = w[h->begin].sign;
    std::vector<Letter> next(w.begin(), w.begin() + static_cast<long>(h->begin));
    for (std::size_t k = h->begin + 1; k < h->end; ++k) {
      const Letter& l = w[k];
      if (l.index == i + 1) {
        next.push_back({i + 1, -e});
        next.push_back({i, l.sign});
        next.push_back({i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<long>(h->end) + 1, w.end());
    if (options.on_step) options.on_step(BraidWord(n, w), BraidWord(n, next));
    w = std::move(next);
  }
  return BraidWord(n, std::move(w));
}

OrderResult dehornoy_compare(const BraidWord& a, const BraidWord& b, const HandleReductionOptions& options) {
  const int n = std::max(a.strands(), b.strands());
  const BraidWord reduced = handle_reduce(multiply(include(b, n), inverse(include(a, n))), options);
  if (reduced.empty()) return OrderResult::Equal;
  const auto sign = is_sigma_positive(reduced);
  if (!sign) throw InternalError("handle-free word " + to_string(reduced) + " is neither sigma-positive nor negative");
  return *sign > 0 ? OrderResult::Less : OrderResult::Greater;
}

}  // namespace braid
