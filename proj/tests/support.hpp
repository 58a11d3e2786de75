#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/laurent.hpp"

namespace braid::support {

/// Rewrites b with random braid relations (far commutation, the braid
/// relation in both directions, insertion of cancelling pairs) so the result
/// is the same braid spelled differently.
BraidWord scramble(const BraidWord& b, std::size_t moves, std::mt19937_64& rng);

/// A random pure braid equal to the identity, built as w * scramble(w)^-1.
BraidWord random_trivial_pure(int n, std::size_t length, std::mt19937_64& rng);

/// Every word over s_i^{+-1} in B_n of length exactly len.
std::vector<BraidWord> all_words(int n, std::size_t len);

/// Random Laurent polynomial with a few small terms.
LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int span = 5, int max_coeff = 5);

/// Signed crossing count between strands i and j (by starting position),
/// halved. An independent route to the linking numbers of a pure braid.
int crossing_linking_number(const BraidWord& b, int i, int j);

// Brute-force bracket of the closure. Loops are traced by walking an explicit
// degree-2 graph, not by union-find. A positive crossing's vertical smoothing
// carries a, its cap-cup smoothing a^-1; negative crossings swap the two.
LaurentPoly bracket_oracle(const BraidWord& b);

}  // namespace braid::support
