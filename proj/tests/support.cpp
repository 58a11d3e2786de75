#include "support.hpp"

#include <cstdlib>

#include "braid/errors.hpp"

namespace braid::support {

BraidWord scramble(const BraidWord& b, std::size_t moves, std::mt19937_64& rng) {
  std::vector<Letter> w = b.letters();
  const int n = b.strands();
  if (n < 2) return b;
  for (std::size_t m = 0; m < moves; ++m) {
    const auto kind = rng() % 3;
    const std::size_t pos = w.empty() ? 0 : static_cast<std::size_t>(rng() % (w.size() + 1));
    if (kind == 0 || w.size() < 2) {
      const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      const int s = (rng() & 1U) != 0 ? 1 : -1;
      w.insert(w.begin() + static_cast<long>(pos), {Letter{i, s}, Letter{i, -s}});
      continue;
    }
    const std::size_t k = static_cast<std::size_t>(rng() % (w.size() - 1));
    const Letter x = w[k];
    const Letter y = w[k + 1];
    if (std::abs(x.index - y.index) > 1) {
      std::swap(w[k], w[k + 1]);
    } else if (k + 2 < w.size() && std::abs(x.index - y.index) == 1 && w[k + 2] == x && x.sign == y.sign) {
      // s_i s_j s_i = s_j s_i s_j, same signs
      w[k] = y;
      w[k + 1] = x;
      w[k + 2] = y;
    }
  }
  return BraidWord(n, std::move(w));
}

BraidWord random_trivial_pure(int n, std::size_t length, std::mt19937_64& rng) {
  const BraidWord w = random_braid(n, length, rng);
  return multiply(w, inverse(scramble(w, 3 * length + 2, rng)));
}

std::vector<BraidWord> all_words(int n, std::size_t len) {
  std::vector<std::vector<Letter>> words{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : words) {
      for (int i = 1; i < n; ++i) {
        for (int s : {1, -1}) {
          auto v = w;
          v.push_back({i, s});
          next.push_back(std::move(v));
        }
      }
    }
    words = std::move(next);
  }
  std::vector<BraidWord> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(n, std::move(w));
  return out;
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int span, int max_coeff) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
  for (int t = 0; t < terms; ++t) {
    const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    const auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * max_coeff + 1)) - max_coeff;
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

int crossing_linking_number(const BraidWord& b, int i, int j) {
  std::vector<int> at(static_cast<std::size_t>(b.strands()) + 1);
  for (int p = 1; p <= b.strands(); ++p) at[p] = p;
  int twice = 0;
  for (const auto& l : b.letters()) {
    const int u = at[l.index];
    const int v = at[l.index + 1];
    if ((u == i && v == j) || (u == j && v == i)) twice += l.sign;
    std::swap(at[l.index], at[l.index + 1]);
  }
  return twice / 2;
}

LaurentPoly bracket_oracle(const BraidWord& b) {
  const int n = b.strands();
  const std::size_t c = b.length();
  if (c > 24) throw DomainError("oracle limited to 24 crossings");
  // Nodes (level, position) for levels 0..c; closure arcs join level c back to level 0.
  const auto node = [n](std::size_t level, int pos) { return level * static_cast<std::size_t>(n) + (pos - 1); };
  const std::size_t nodes = (c + 1) * static_cast<std::size_t>(n);
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    int a_exp = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const Letter l = b.letters()[k];
      const bool vertical = ((state >> k) & 1U) != 0;
      a_exp += (vertical == (l.sign > 0)) ? 1 : -1;
      for (int p = 1; p <= n; ++p) {
        if (p != l.index && p != l.index + 1) edges.emplace_back(node(k, p), node(k + 1, p));
      }
      if (vertical) {
        edges.emplace_back(node(k, l.index), node(k + 1, l.index));
        edges.emplace_back(node(k, l.index + 1), node(k + 1, l.index + 1));
      } else {
        edges.emplace_back(node(k, l.index), node(k, l.index + 1));
        edges.emplace_back(node(k + 1, l.index), node(k + 1, l.index + 1));
      }
    }
    for (int p = 1; p <= n; ++p) edges.emplace_back(node(c, p), node(0, p));

    std::vector<std::vector<std::size_t>> incident(nodes);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident[edges[e].first].push_back(e);
      incident[edges[e].second].push_back(e);
    }
    std::vector<bool> used(edges.size(), false);
    int loops = 0;
    for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
      if (used[e0]) continue;
      ++loops;
      std::size_t e = e0;
      std::size_t at = edges[e0].second;
      while (!used[e]) {
        used[e] = true;
        const auto& inc = incident[at];
        e = inc[0] == e ? inc[1] : inc[0];
        at = edges[e].first == at ? edges[e].second : edges[e].first;
      }
    }
    total += LaurentPoly::monomial(1, a_exp) * lp_pow(d, loops - 1);
  }
  return total;
}

}  // namespace braid::support
