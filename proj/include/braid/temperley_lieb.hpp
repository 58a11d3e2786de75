#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/laurent.hpp"

namespace braid {

/// A crossingless perfect matching of the 2n boundary points of a box.
/// Points 0..n-1 are L1..Ln on the left, n..2n-1 are R1..Rn on the right.
class PlanarMatching {
 public:
  PlanarMatching() = default;
  /// Throws DomainError unless partner is an involution without fixed
  /// points whose arcs do not cross.
  PlanarMatching(int n, std::vector<std::uint8_t> partner);

  static PlanarMatching identity(int n);
  /// Caps L_i-L_{i+1} and R_i-R_{i+1}, other strings straight across.
  static PlanarMatching cap(int i, int n);

  [[nodiscard]] int strands() const { return n_; }
  [[nodiscard]] int partner(int point) const { return partner_.at(static_cast<std::size_t>(point)); }
  [[nodiscard]] const std::vector<std::uint8_t>& partners() const { return partner_; }
  /// Arcs as (p, q) with p < q, ordered by p.
  [[nodiscard]] std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> partner_;
};

/// True iff no two arcs interleave on the boundary circle L1..Ln, Rn..R1.
bool is_planar(int n, const std::vector<std::uint8_t>& partner);

/// Concatenates x then y (x's right points glued to y's left points).
/// Returns the resulting matching and the number of closed loops removed.
std::pair<PlanarMatching, int> compose(const PlanarMatching& x, const PlanarMatching& y);

/// Loops in the closure of m (L_k joined to R_k around the outside).
int closure_loops(const PlanarMatching& m);

/// Integer-Laurent (in A) combination of planar matchings on n strands.
class TLElement {
 public:
  using Terms = std::map<PlanarMatching, LaurentPoly>;

  explicit TLElement(int n = 1);
  TLElement(int n, Terms terms);

  static TLElement identity(int n);
  static TLElement basis(const PlanarMatching& m, LaurentPoly coeff = LaurentPoly(1));

  [[nodiscard]] int strands() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  TLElement& operator+=(const TLElement& y);
  friend TLElement operator+(TLElement x, const TLElement& y) { return x += y; }
  friend TLElement operator*(const LaurentPoly& c, const TLElement& x);
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  void add_term(const PlanarMatching& m, const LaurentPoly& c);
  int n_ = 1;
  Terms terms_;
};

/// The loop value -A^2 - A^-2.
LaurentPoly tl_delta();

/// All planar matchings on n strands, sorted; Catalan(n) of them.
std::vector<PlanarMatching> tl_basis(int n);
TLElement tl_e(int i, int n);
TLElement tl_mul(const TLElement& x, const TLElement& y);
TLElement operator*(const TLElement& x, const TLElement& y);

/// s_i -> A + A^-1 e_i, s_i^-1 -> A^-1 + A e_i.
TLElement jones_rep(const BraidWord& b);

/// Sum of coeff(M) * delta^(closure_loops(M) - 1).
LaurentPoly markov_trace(const TLElement& x);

/// markov_trace(jones_rep(b)): the Kauffman bracket of the closure, in A.
LaurentPoly bracket_via_tl(const BraidWord& b);

}  // namespace braid
