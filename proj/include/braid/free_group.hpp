#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// A word in the free group on x_1..x_rank. Construction keeps the letters
/// as given; every operation below returns freely reduced words.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  /// Throws RangeError for letter indices outside 1..rank.
  FreeWord(int rank, std::vector<Letter> letters);
  static FreeWord from_signed(int rank, std::initializer_list<int> values);
  static FreeWord generator(int rank, int i);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] bool is_reduced() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

FreeWord free_reduce(const FreeWord& w);
/// Reduced product u v.
FreeWord operator*(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);

/// "1 -2 1" = x1 x2^-1 x1. Rank defaults to the largest index used.
FreeWord parse_free_word(std::string_view text, int rank);
std::string to_string(const FreeWord& w);

/// Images act(b)(x_1), ..., act(b)(x_n), reduced.
///
/// Each letter acts by
///   s_i:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
///   s_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// and a word acts letter by letter from the left: act(ab) = act(b) o act(a).
std::vector<FreeWord> artin_images(const BraidWord& b);

/// act(b)(w). Throws DomainError unless w.rank() == b.strands().
FreeWord artin_apply(const BraidWord& b, const FreeWord& w);

/// Word problem in B_n through the faithful Artin action.
bool is_identity(const BraidWord& b);

/// True iff a and b represent the same braid.
bool braid_equal(const BraidWord& a, const BraidWord& b);

/// If the reduced word w equals u^-1 x_j u (x_j a positive generator),
/// returns j and sets conjugator = u; otherwise returns 0.
int conjugate_of_generator(const FreeWord& w, FreeWord* conjugator = nullptr);

/// Self-test of the characterisation of braid automorphisms: every image is
/// a conjugate of a generator, the induced index map is a permutation, and
/// x_1 ... x_n is fixed.
bool verify_artin_form(const BraidWord& b);

}  // namespace braid
