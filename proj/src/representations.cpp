#include "braid/representations.hpp"

#include "braid/errors.hpp"

namespace braid {

namespace {

// Multiplies m on the right by the Burau matrix of one letter, touching only
// columns i and i+1.
void right_multiply_letter(LaurentMatrix& m, const Letter& l) {
  const int c0 = l.index - 1;
  const int c1 = l.index;
  const LaurentPoly one(1);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  for (int r = 0; r < m.size(); ++r) {
    const LaurentPoly a = m(r, c0);
    const LaurentPoly b = m(r, c1);
    if (l.sign > 0) {
      // [a b] [[1-t, t], [1, 0]] = [a(1-t) + b, a t]
      m(r, c0) = a * (one - t) + b;
      m(r, c1) = a * t;
    } else {
      // [a b] [[0, 1], [t^-1, 1-t^-1]] = [b t^-1, a + b(1-t^-1)]
      m(r, c0) = b * tinv;
      m(r, c1) = a + b * (one - tinv);
    }
  }
}

}  // namespace

LaurentMatrix burau(const BraidWord& b) {
  LaurentMatrix m = LaurentMatrix::identity(b.strands());
  for (const auto& l : b.letters()) right_multiply_letter(m, l);
  return m;
}

std::vector<std::vector<std::int64_t>> burau_at_one(const BraidWord& b) { return lm_eval_int(burau(b), 1); }

std::vector<std::vector<std::int64_t>> permutation_matrix(const Permutation& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (int j = 1; j <= p.size(); ++j) m[p(j) - 1][j - 1] = 1;
  return m;
}

IntMatrix2 mat2_mul(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r[i][j] = checked::add(checked::mul(a[i][0], b[0][j]), checked::mul(a[i][1], b[1][j]));
    }
  }
  return r;
}

IntMatrix2 mat2_identity() { return {{{1, 0}, {0, 1}}}; }

IntMatrix2 modular(const BraidWord& b) {
  if (b.strands() != 3) throw DomainError("modular map is defined on B_3 only");
  static constexpr IntMatrix2 s1{{{1, -1}, {0, 1}}};
  static constexpr IntMatrix2 s1_inv{{{1, 1}, {0, 1}}};
  static constexpr IntMatrix2 s2{{{1, 0}, {1, 1}}};
  static constexpr IntMatrix2 s2_inv{{{1, 0}, {-1, 1}}};
  IntMatrix2 m = mat2_identity();
  for (const auto& l : b.letters()) {
    const IntMatrix2& g = l.index == 1 ? (l.sign > 0 ? s1 : s1_inv) : (l.sign > 0 ? s2 : s2_inv);
    m = mat2_mul(m, g);
  }
  return m;
}

}  // namespace braid
