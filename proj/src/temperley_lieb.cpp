#include "braid/temperley_lieb.hpp"

#include <algorithm>
#include <functional>

#include "braid/errors.hpp"

namespace braid {

namespace {

// Position of a point on the boundary circle L1..Ln, Rn..R1.
int circle_position(int point, int n) { return point < n ? point : 3 * n - 1 - point; }

int circle_point(int position, int n) { return position < n ? position : 3 * n - 1 - position; }

LaurentPoly delta_power(int k) {
  static const LaurentPoly delta = tl_delta();
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r *= delta;
  return r;
}

}  // namespace

bool is_planar(int n, const std::vector<std::uint8_t>& partner) {
  std::vector<std::pair<int, int>> chords;
  for (int p = 0; p < 2 * n; ++p) {
    const int q = partner[p];
    if (p < q) {
      int a = circle_position(p, n);
      int b = circle_position(q, n);
      if (a > b) std::swap(a, b);
      chords.emplace_back(a, b);
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto [a, b] = chords[i];
      const auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

PlanarMatching::PlanarMatching(int n, std::vector<std::uint8_t> partner) : n_(n), partner_(std::move(partner)) {
  if (n < 0 || partner_.size() != static_cast<std::size_t>(2 * n)) throw DomainError("matching size mismatch");
  for (int p = 0; p < 2 * n; ++p) {
    const int q = partner_[p];
    if (q >= 2 * n || q == p || partner_[q] != p) throw DomainError("not a perfect matching");
  }
  if (!is_planar(n, partner_)) throw DomainError("matching is not planar");
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    partner[k] = static_cast<std::uint8_t>(n + k);
    partner[n + k] = static_cast<std::uint8_t>(k);
  }
  return PlanarMatching(n, std::move(partner));
}

PlanarMatching PlanarMatching::cap(int i, int n) {
  if (i < 1 || i > n - 1) throw RangeError("e_" + std::to_string(i) + " out of range for TL_" + std::to_string(n));
  std::vector<std::uint8_t> partner = identity(n).partners();
  const int l = i - 1;
  partner[l] = static_cast<std::uint8_t>(l + 1);
  partner[l + 1] = static_cast<std::uint8_t>(l);
  partner[n + l] = static_cast<std::uint8_t>(n + l + 1);
  partner[n + l + 1] = static_cast<std::uint8_t>(n + l);
  return PlanarMatching(n, std::move(partner));
}

std::vector<std::pair<int, int>> PlanarMatching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < 2 * n_; ++p) {
    if (p < partner_[p]) out.emplace_back(p, partner_[p]);
  }
  return out;
}

std::pair<PlanarMatching, int> compose(const PlanarMatching& x, const PlanarMatching& y) {
  const int n = x.strands();
  if (y.strands() != n) throw DomainError("TL size mismatch");
  std::vector<std::uint8_t> result(static_cast<std::size_t>(2 * n));
  std::vector<bool> middle_seen(static_cast<std::size_t>(n), false);

  // Walk from an outer point until another outer point is reached. Side 0 is
  // x, side 1 is y; middle point k is x.R_k = y.L_k.
  auto walk = [&](int side, int point) {
    for (;;) {
      const int q = side == 0 ? x.partner(point) : y.partner(point);
      if (side == 0 && q < n) return q;       // x left point
      if (side == 1 && q >= n) return q;      // y right point
      const int mid = side == 0 ? q - n : q;  // crossed into the middle
      middle_seen[mid] = true;
      side = 1 - side;
      point = side == 0 ? n + mid : mid;
    }
  };

  for (int k = 0; k < n; ++k) {
    result[k] = static_cast<std::uint8_t>(walk(0, k));
    result[n + k] = static_cast<std::uint8_t>(walk(1, n + k));
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    // Closed loop: alternate x-arcs (R to R) and y-arcs (L to L).
    int cur = m;
    int side = 0;
    do {
      middle_seen[cur] = true;
      cur = side == 0 ? x.partner(n + cur) - n : y.partner(cur);
      side = 1 - side;
    } while (!(cur == m && side == 0));
  }
  return {PlanarMatching(n, std::move(result)), loops};
}

int closure_loops(const PlanarMatching& m) {
  const int n = m.strands();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = start;
    do {
      seen[p] = true;
      const int q = m.partner(p);
      seen[q] = true;
      p = q < n ? q + n : q - n;  // closure strand back around
    } while (p != start);
  }
  return loops;
}

TLElement::TLElement(int n) : n_(n) {
  if (n < 1) throw DomainError("TL algebra needs at least one strand");
}

TLElement::TLElement(int n, Terms terms) : n_(n) {
  if (n < 1) throw DomainError("TL algebra needs at least one strand");
  for (const auto& [m, c] : terms) add_term(m, c);
}

TLElement TLElement::identity(int n) { return basis(PlanarMatching::identity(n)); }

TLElement TLElement::basis(const PlanarMatching& m, LaurentPoly coeff) {
  TLElement x(m.strands());
  x.add_term(m, coeff);
  return x;
}

void TLElement::add_term(const PlanarMatching& m, const LaurentPoly& c) {
  if (m.strands() != n_) throw DomainError("TL size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& y) {
  if (y.n_ != n_) throw DomainError("TL size mismatch");
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

TLElement operator*(const LaurentPoly& c, const TLElement& x) {
  TLElement r(x.n_);
  for (const auto& [m, coeff] : x.terms_) r.add_term(m, c * coeff);
  return r;
}

LaurentPoly tl_delta() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

std::vector<PlanarMatching> tl_basis(int n) {
  if (n < 1) throw DomainError("TL basis needs n >= 1");
  std::vector<PlanarMatching> out;
  std::vector<int> circle_partner(static_cast<std::size_t>(2 * n), -1);

  // Non-crossing completions, always pairing the leftmost free position.
  std::function<void(int)> fill = [&](int next_free) {
    while (next_free < 2 * n && circle_partner[next_free] != -1) ++next_free;
    if (next_free == 2 * n) {
      std::vector<std::uint8_t> partner(static_cast<std::size_t>(2 * n));
      for (int c = 0; c < 2 * n; ++c) {
        partner[circle_point(c, n)] = static_cast<std::uint8_t>(circle_point(circle_partner[c], n));
      }
      out.emplace_back(n, std::move(partner));
      return;
    }
    // Pair next_free with a later free position leaving an even, unblocked gap.
    for (int k = next_free + 1; k < 2 * n; k += 2) {
      if (circle_partner[k] != -1) break;
      bool inner_free = true;
      for (int c = next_free + 1; c < k; ++c) inner_free = inner_free && circle_partner[c] == -1;
      if (!inner_free) break;
      circle_partner[next_free] = k;
      circle_partner[k] = next_free;
      fill(next_free + 1);
      circle_partner[next_free] = -1;
      circle_partner[k] = -1;
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

TLElement tl_e(int i, int n) { return TLElement::basis(PlanarMatching::cap(i, n)); }

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands()) throw DomainError("TL size mismatch");
  TLElement::Terms acc;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [m, loops] = compose(mx, my);
      LaurentPoly c = cx * cy * delta_power(loops);
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  }
  return TLElement(x.strands(), std::move(acc));
}

TLElement operator*(const TLElement& x, const TLElement& y) { return tl_mul(x, y); }

TLElement jones_rep(const BraidWord& b) {
  const int n = b.strands();
  const LaurentPoly a = LaurentPoly::monomial(1, 1);
  const LaurentPoly a_inv = LaurentPoly::monomial(1, -1);
  TLElement result = TLElement::identity(n);
  for (const auto& l : b.letters()) {
    const LaurentPoly& straight = l.sign > 0 ? a : a_inv;
    const LaurentPoly& capped = l.sign > 0 ? a_inv : a;
    const TLElement g = straight * TLElement::identity(n) + capped * tl_e(l.index, n);
    result = tl_mul(result, g);
  }
  return result;
}

LaurentPoly markov_trace(const TLElement& x) {
  LaurentPoly sum;
  for (const auto& [m, c] : x.terms()) sum += c * delta_power(closure_loops(m) - 1);
  return sum;
}

LaurentPoly bracket_via_tl(const BraidWord& b) { return markov_trace(jones_rep(b)); }

}  // namespace braid
