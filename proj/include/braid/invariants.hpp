#pragma once

#include <cstdint>
#include <string>

#include "braid/braid_word.hpp"
#include "braid/fuzz_report.hpp"
#include "braid/laurent.hpp"

namespace braid {

/// Which smoothing of a positive crossing carries the coefficient a. The
/// other smoothing gets a^-1, and negative letters swap the two.
enum class SmoothingConvention {
  /// Straight-through smoothing gets a, cap-cup smoothing gets a^-1. This is
  /// the convention under which f(closure of s1 in B_2) = 1.
  kStraightIsA,
  kCapIsA,
};

inline constexpr SmoothingConvention kDefaultSmoothing = SmoothingConvention::kStraightIsA;

/// Longest word evaluated by the 2^c state sum inside report(); longer words
/// go through the Temperley-Lieb route.
inline constexpr std::size_t kStateSumCrossingLimit = 20;

struct PolynomialReport {
  LaurentPoly bracket;  // in a
  int writhe = 0;
  LaurentPoly f;        // (-a^3)^-writhe <bracket>, in a
  LaurentPoly jones_q;  // f with a = q^-1, where q = t^(1/4)
  int components = 0;
};

/// Kauffman bracket of the closure of b by summing over all 2^c smoothings,
/// counting loops with union-find over strand segments. Throws DomainError
/// above 30 letters.
LaurentPoly bracket_state_sum(const BraidWord& b, SmoothingConvention convention = kDefaultSmoothing);

/// Every crossing of a braid closure has the sign of its letter.
int writhe(const BraidWord& b);

/// Link components of the closure: cycles of the permutation.
int components(const BraidWord& b);

PolynomialReport report(const BraidWord& b);

/// Writes jones_q in t = q^4 when every exponent is a multiple of 4, in
/// sqrt(t) = q^2 when every exponent is even, and in q otherwise.
std::string jones_display(const LaurentPoly& jones_q);

/// g^-1 b g, with g included into B_n.
BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g);
/// b s_n^sign in B_{n+1}; sign is +1 or -1.
BraidWord markov_stabilize(const BraidWord& b, int sign);

enum class MarkovFault {
  kNone,
  /// Compare raw brackets instead of f (negative control).
  kSkipWritheCorrection,
};

/// Random braids (n <= n_max, length <= len_max) under random conjugations
/// and stabilizations; counts moves that change f.
FuzzReport fuzz_markov(int n_max, std::size_t len_max, std::size_t trials, std::uint64_t seed,
                       MarkovFault fault = MarkovFault::kNone);

}  // namespace braid
