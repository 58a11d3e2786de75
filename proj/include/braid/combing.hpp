#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/free_group.hpp"

namespace braid {

/// Artin coordinates (beta_1, ..., beta_{n-1}) of a pure braid: coords[k-1]
/// is a reduced word of rank k, written in the basis alpha_{1,k+1}, ...,
/// alpha_{k,k+1}, and the braid equals beta_1 beta_2 ... beta_{n-1}.
struct ArtinCoordinates {
  int strands = 1;
  std::vector<FreeWord> coords;

  friend bool operator==(const ArtinCoordinates&, const ArtinCoordinates&) = default;
};

/// Deletes the strand that starts at position n. Requires a pure braid.
BraidWord forget_last(const BraidWord& b);

/// f(b)^-1 b, which lies in the kernel K of forget_last.
BraidWord kernel_part(const BraidWord& b);

/// The free word of an element of K in the basis alpha_{1,n}, ..., alpha_{n-1,n}.
///
/// act(k)(x_n) reduces to w^-1 x_n w. Deleting the x_n letters of w gives a
/// word in x_1..x_{n-1} that is well defined (the conjugator is only fixed up
/// to a left power of x_n) and multiplicative on K; its inverse sends
/// alpha_{i,n} to x_i.
FreeWord loop_word(const BraidWord& k);

ArtinCoordinates comb(const BraidWord& b);
BraidWord reconstruct(const ArtinCoordinates& c);

/// Word problem in P_n: true iff every coordinate is empty.
bool pure_word_problem(const BraidWord& b);

/// Pairwise linking numbers lk(i,j), i < j, ordered (1,2), (1,3), ..., (n-1,n).
std::vector<int> linking_numbers(const BraidWord& b);

/// Position of lk(i,j) in the linking_numbers vector.
std::size_t linking_index(int i, int j, int n);

}  // namespace braid
