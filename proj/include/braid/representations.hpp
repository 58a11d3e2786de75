#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/laurent.hpp"

namespace braid {

/// Unreduced Burau matrix over Z[t, t^-1]:
///   s_j    -> I_{j-1} + [[1-t, t], [1, 0]] + I_{n-j-1}
///   s_j^-1 -> I_{j-1} + [[0, 1], [t^-1, 1-t^-1]] + I_{n-j-1}
/// and a word maps to the ordered product of its letters' matrices.
/// Faithful for n <= 3 only; not a word-problem oracle beyond B_3.
LaurentMatrix burau(const BraidWord& b);

/// burau(b) at t = 1, i.e. the permutation matrix of b.
std::vector<std::vector<std::int64_t>> burau_at_one(const BraidWord& b);

/// 0/1 matrix with a 1 at (p(j), j), matching burau_at_one.
std::vector<std::vector<std::int64_t>> permutation_matrix(const Permutation& p);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

IntMatrix2 mat2_mul(const IntMatrix2& a, const IntMatrix2& b);
IntMatrix2 mat2_identity();

/// B_3 -> SL(2, Z): s1 -> [[1,-1],[0,1]], s2 -> [[1,0],[1,1]]. These send
/// s1 s2 s1 to S = [[0,-1],[1,0]] and s1 s2 to T = [[0,-1],[1,1]].
/// Throws DomainError unless b has 3 strands.
IntMatrix2 modular(const BraidWord& b);

}  // namespace braid
