#include "braid/free_group.hpp"

#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {

// Appends letters to a reduced word, cancelling at the seam.
void append_reduced(std::vector<Letter>& out, std::span<const Letter> tail) {
  for (const auto& l : tail) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

void append_inverse_reduced(std::vector<Letter>& out, std::span<const Letter> w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Letter l = it->inverse();
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

std::vector<Letter> conjugate_by_first(const std::vector<Letter>& a, const std::vector<Letter>& c) {
  // a c a^-1
  std::vector<Letter> out;
  out.reserve(2 * a.size() + c.size());
  append_reduced(out, a);
  append_reduced(out, c);
  append_inverse_reduced(out, a);
  return out;
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw DomainError("free group rank must be non-negative");
}

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank < 0) throw DomainError("free group rank must be non-negative");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > rank_) {
      throw RangeError("free generator x" + std::to_string(l.index) + " out of range for rank " +
                       std::to_string(rank_));
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

FreeWord FreeWord::from_signed(int rank, std::initializer_list<int> values) {
  std::vector<Letter> letters;
  for (int v : values) {
    if (v == 0) throw RangeError("x0 is not a generator");
    letters.push_back(Letter::from_signed(v));
  }
  return FreeWord(rank, std::move(letters));
}

FreeWord FreeWord::generator(int rank, int i) { return FreeWord(rank, {Letter{i, 1}}); }

bool FreeWord::is_reduced() const {
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (letters_[k] == letters_[k - 1].inverse()) return false;
  }
  return true;
}

FreeWord free_reduce(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  append_reduced(out, w.letters());
  return FreeWord(w.rank(), std::move(out));
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw DomainError("free word rank mismatch");
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  append_reduced(out, u.letters());
  append_reduced(out, v.letters());
  return FreeWord(u.rank(), std::move(out));
}

FreeWord inverse(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  append_inverse_reduced(out, w.letters());
  return FreeWord(w.rank(), std::move(out));
}

FreeWord parse_free_word(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed free-word token '" + token + "'");
    }
    if (used != token.size()) throw ParseError("malformed free-word token '" + token + "'");
    if (v == 0) throw ParseError("x0 is not a generator");
    letters.push_back(Letter::from_signed(v));
  }
  return FreeWord(rank, std::move(letters));
}

std::string to_string(const FreeWord& w) { return letters_to_string(w.letters()); }

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int n = b.strands();
  // images[j] = act(suffix)(x_{j+1}); walking the word right to left keeps
  // every update a concatenation of existing images.
  std::vector<std::vector<Letter>> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[j] = {Letter{j + 1, 1}};

  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int i = it->index - 1;
    std::vector<Letter> a = std::move(images[i]);
    std::vector<Letter> c = std::move(images[i + 1]);
    if (it->sign > 0) {
      images[i] = conjugate_by_first(a, c);
      images[i + 1] = std::move(a);
    } else {
      // c^-1 a c
      std::vector<Letter> cinv;
      append_inverse_reduced(cinv, c);
      images[i + 1] = conjugate_by_first(cinv, a);
      images[i] = std::move(c);
    }
  }

  std::vector<FreeWord> out;
  out.reserve(images.size());
  for (auto& img : images) out.emplace_back(n, std::move(img));
  return out;
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& w) {
  if (w.rank() != b.strands()) {
    throw DomainError("artin_apply: free word rank " + std::to_string(w.rank()) +
                      " does not match strand count " + std::to_string(b.strands()));
  }
  const auto images = artin_images(b);
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const auto& img = images[l.index - 1].letters();
    if (l.sign > 0) {
      append_reduced(out, img);
    } else {
      append_inverse_reduced(out, img);
    }
  }
  return FreeWord(w.rank(), std::move(out));
}

bool is_identity(const BraidWord& b) {
  const auto cancelled = free_cancel(b);
  if (cancelled.empty()) return true;
  if (!is_pure(cancelled) || degree(cancelled) != 0) return false;
  const auto images = artin_images(cancelled);
  for (int j = 0; j < cancelled.strands(); ++j) {
    if (images[j].letters() != std::vector<Letter>{Letter{j + 1, 1}}) return false;
  }
  return true;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  const int n = std::max(a.strands(), b.strands());
  return is_identity(multiply(include(a, n), inverse(include(b, n))));
}

int conjugate_of_generator(const FreeWord& w, FreeWord* conjugator) {
  const auto& ls = w.letters();
  if (ls.size() % 2 == 0) return 0;
  const std::size_t mid = ls.size() / 2;
  if (ls[mid].sign != 1) return 0;
  for (std::size_t k = 0; k < mid; ++k) {
    if (ls[k] != ls[ls.size() - 1 - k].inverse()) return 0;
  }
  if (!w.is_reduced()) return 0;
  if (conjugator != nullptr) {
    *conjugator = FreeWord(w.rank(), std::vector<Letter>(ls.begin() + static_cast<long>(mid) + 1, ls.end()));
  }
  return ls[mid].index;
}

bool verify_artin_form(const BraidWord& b) {
  const int n = b.strands();
  const auto images = artin_images(b);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& img : images) {
    const int j = conjugate_of_generator(img);
    if (j == 0 || hit[j - 1]) return false;
    hit[j - 1] = true;
  }
  std::vector<Letter> product;
  for (const auto& img : images) append_reduced(product, img.letters());
  std::vector<Letter> expected;
  for (int j = 1; j <= n; ++j) expected.push_back({j, 1});
  return product == expected;
}

}  // namespace braid
