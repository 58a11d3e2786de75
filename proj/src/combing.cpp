#include "braid/combing.hpp"

#include "braid/errors.hpp"

namespace braid {

namespace {

void require_pure(const BraidWord& b, const char* what) {
  if (!is_pure(b)) throw DomainError(std::string(what) + " requires a pure braid");
}

}  // namespace

BraidWord forget_last(const BraidWord& b) {
  require_pure(b, "forget_last");
  const int n = b.strands();
  if (n == 1) throw DomainError("forget_last needs at least two strands");

  // Current position of the strand that started at position n.
  int last_pos = n;

  std::vector<Letter> kept;
  for (const auto& l : b.letters()) {
    const int i = l.index;
    if (i == last_pos || i + 1 == last_pos) {
      last_pos = (i == last_pos) ? i + 1 : i;
    } else {
      kept.push_back({i > last_pos ? i - 1 : i, l.sign});
    }
  }
  return BraidWord(n - 1, std::move(kept));
}

BraidWord kernel_part(const BraidWord& b) {
  require_pure(b, "kernel_part");
  if (b.strands() == 1) return b;
  return multiply(inverse(include(forget_last(b), b.strands())), b);
}

FreeWord loop_word(const BraidWord& k) {
  require_pure(k, "loop_word");
  const int n = k.strands();
  if (n == 1) return FreeWord(0);
  if (!is_identity(forget_last(k))) {
    throw DomainError("loop_word: braid is not in the kernel of forget_last");
  }
  const FreeWord image = artin_apply(k, FreeWord::generator(n, n));
  FreeWord conj;
  if (conjugate_of_generator(image, &conj) != n) {
    throw InternalError("loop_word: act(k)(x_n) = " + to_string(image) +
                        " is not a conjugate of x_n");
  }
  std::vector<Letter> projected;
  for (const auto& l : conj.letters()) {
    if (l.index != n) projected.push_back(l);
  }
  return inverse(FreeWord(n - 1, std::move(projected)));
}

ArtinCoordinates comb(const BraidWord& b) {
  require_pure(b, "comb");
  const int n = b.strands();
  ArtinCoordinates out{n, std::vector<FreeWord>(static_cast<std::size_t>(std::max(n - 1, 0)))};
  BraidWord current = free_cancel(b);
  for (int j = n; j >= 2; --j) {
    out.coords[j - 2] = loop_word(kernel_part(current));
    current = forget_last(current);
  }
  return out;
}

BraidWord reconstruct(const ArtinCoordinates& c) {
  const int n = c.strands;
  if (static_cast<int>(c.coords.size()) != std::max(n - 1, 0)) {
    throw DomainError("coordinate count does not match strand count");
  }
  BraidWord out(n);
  for (int k = 1; k <= n - 1; ++k) {
    const FreeWord& w = c.coords[k - 1];
    if (w.rank() != k) throw DomainError("coordinate " + std::to_string(k) + " must have rank " + std::to_string(k));
    for (const auto& l : w.letters()) {
      const BraidWord g = pure_generator(l.index, k + 1, n);
      out = multiply(out, l.sign > 0 ? g : inverse(g));
    }
  }
  return out;
}

bool pure_word_problem(const BraidWord& b) {
  const auto c = comb(b);
  for (const auto& w : c.coords) {
    if (!w.empty()) return false;
  }
  return true;
}

std::size_t linking_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw RangeError("linking pair out of range");
  // Pairs (1,2),...,(1,n),(2,3),...: offset of row i plus column.
  std::size_t idx = 0;
  for (int r = 1; r < i; ++r) idx += static_cast<std::size_t>(n - r);
  return idx + static_cast<std::size_t>(j - i - 1);
}

std::vector<int> linking_numbers(const BraidWord& b) {
  const auto c = comb(b);
  const int n = c.strands;
  std::vector<int> lk(static_cast<std::size_t>(n * (n - 1) / 2), 0);
  for (int k = 1; k <= n - 1; ++k) {
    for (const auto& l : c.coords[k - 1].letters()) lk[linking_index(l.index, k + 1, n)] += l.sign;
  }
  return lk;
}

}  // namespace braid
