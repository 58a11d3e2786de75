#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braid {

/// A signed generator letter: sigma_index^sign for braids, x_index^sign for
/// free words. Indices are 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  [[nodiscard]] constexpr Letter inverse() const { return {index, -sign}; }
  [[nodiscard]] constexpr int signed_value() const { return sign * index; }
  static constexpr Letter from_signed(int v) { return {v < 0 ? -v : v, v < 0 ? -1 : 1}; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators sigma_1..sigma_{n-1} of B_n. Products are
/// left-to-right concatenation. Letters are kept exactly as given; nothing
/// is cancelled unless free_cancel is called.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  /// Throws RangeError if a letter index is outside 1..strands-1.
  BraidWord(int strands, std::vector<Letter> letters);

  /// Builds a word from signed generator values, e.g. {1, -2} = s1 s2^-1.
  static BraidWord from_signed(int strands, std::span<const int> values);
  static BraidWord from_signed(int strands, std::initializer_list<int> values);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// A permutation of {1..n}, stored as images[p-1] for p = 1..n.
///
/// For a braid word the convention is the left-to-right product of the
/// transpositions (i i+1) read as functions composed right to left, so
/// permutation(s1 s2) sends 1->2->3->1. Equivalently images[p-1] is the
/// starting position of the strand that ends at position p.
class Permutation {
 public:
  explicit Permutation(int n = 0);
  /// Throws DomainError if images is not a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int point) const { return images_.at(point - 1); }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] int cycle_count() const;

  /// (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses "n=<k>; i j -k ...". Without a header, n = max|value| + 1 unless
/// n_hint is given; a header overrides the hint.
BraidWord parse_braid(std::string_view text, std::optional<int> n_hint = std::nullopt);

/// Renders in the parse_braid format, always with an "n=" header.
std::string to_string(const BraidWord& b);
/// Space-separated signed letters, no header.
std::string letters_to_string(std::span<const Letter> letters);

/// Concatenation. Words on fewer strands are included into the larger B_n.
BraidWord multiply(const BraidWord& a, const BraidWord& b);
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
/// b^k for any integer k.
BraidWord power(const BraidWord& b, int k);
/// Deletes adjacent s_i s_i^-1 and s_i^-1 s_i pairs until none remain.
BraidWord free_cancel(const BraidWord& a);

Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
/// Exponent sum; the abelianization B_n -> Z.
int degree(const BraidWord& b);

/// Delta_n = (s1)(s2 s1)...(s_{n-1}...s1).
BraidWord half_twist(int n);
/// (s1 s2 ... s_{n-1})^n, generator of the centre.
BraidWord full_twist(int n);
/// alpha_{ij} = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1, 1 <= i < j <= n.
BraidWord pure_generator(int i, int j, int n);

BraidWord mirror(const BraidWord& b);
/// Reinterprets b in B_m, m >= strands(b).
BraidWord include(const BraidWord& b, int m);

/// Uniform letters from {s_i^{+-1}}; deterministic in the engine state.
BraidWord random_braid(int n, std::size_t length, std::mt19937_64& rng);
BraidWord random_braid(int n, std::size_t length, std::uint64_t seed);
/// A random pure braid of even length <= max_length, by rejection sampling
/// of random words. Gives up after max_attempts and returns the identity.
BraidWord random_pure_braid(int n, std::size_t max_length, std::mt19937_64& rng,
                            std::size_t max_attempts = 1'000'000);

}  // namespace braid
