#include "braid/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {

void check_strands(int n) {
  if (n < 1) throw DomainError("strand count must be at least 1, got " + std::to_string(n));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError("malformed integer token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw RangeError("generator index " + std::to_string(l.index) + " out of range for B_" +
                       std::to_string(strands_));
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::from_signed(int strands, std::span<const int> values) {
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values) {
    if (v == 0) throw RangeError("generator index 0 is not a letter");
    letters.push_back(Letter::from_signed(v));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::from_signed(int strands, std::initializer_list<int> values) {
  return from_signed(strands, std::span<const int>(values.begin(), values.size()));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1]) throw DomainError("not a permutation");
    seen[v - 1] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images_[j] - 1) seen[j] = true;
  }
  return cycles;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  std::vector<int> images(p.images_.size());
  for (int x = 1; x <= p.size(); ++x) images[x - 1] = p(q(x));
  return Permutation(std::move(images));
}

BraidWord parse_braid(std::string_view text, std::optional<int> n_hint) {
  std::string_view body = trim(text);
  std::optional<int> n = n_hint;
  if (body.starts_with("n=") || body.starts_with("n =")) {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("header 'n=<k>' must end with ';'");
    std::string_view header = trim(body.substr(1, semi - 1));
    if (header.empty() || header.front() != '=') throw ParseError("malformed header");
    n = parse_int(trim(header.substr(1)));
    if (*n < 1) throw ParseError("strand count in header must be at least 1");
    body = body.substr(semi + 1);
  }
  if (n && *n < 1) throw ParseError("strand count must be at least 1");

  std::vector<int> values;
  std::istringstream in{std::string(body)};
  std::string token;
  int max_index = 0;
  while (in >> token) {
    const int v = parse_int(token);
    if (v == 0) throw ParseError("generator index 0 is not a letter");
    values.push_back(v);
    max_index = std::max(max_index, std::abs(v));
  }
  const int strands = n.value_or(max_index + 1);
  if (max_index >= strands) {
    throw RangeError("generator index " + std::to_string(max_index) + " needs at least " +
                     std::to_string(max_index + 1) + " strands, have " + std::to_string(strands));
  }
  return BraidWord::from_signed(strands, values);
}

std::string letters_to_string(std::span<const Letter> letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.signed_value());
  }
  return out;
}

std::string to_string(const BraidWord& b) {
  std::string out = "n=" + std::to_string(b.strands()) + ";";
  if (!b.empty()) out += " " + letters_to_string(b.letters());
  return out;
}

BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(letters));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) { return multiply(a, b); }

BraidWord inverse(const BraidWord& a) {
  std::vector<Letter> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& b, int k) {
  const BraidWord base = k < 0 ? inverse(b) : b;
  std::vector<Letter> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(std::abs(k)));
  for (int i = 0; i < std::abs(k); ++i) {
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  }
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord free_cancel(const BraidWord& a) {
  std::vector<Letter> stack;
  stack.reserve(a.length());
  for (const auto& l : a.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

Permutation permutation(const BraidWord& b) {
  // Apply transpositions right to left so the result is t_1 o t_2 o ... .
  std::vector<int> images(static_cast<std::size_t>(b.strands()));
  for (int x = 1; x <= b.strands(); ++x) {
    int y = x;
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
      if (y == it->index) {
        y = it->index + 1;
      } else if (y == it->index + 1) {
        y = it->index;
      }
    }
    images[x - 1] = y;
  }
  return Permutation(std::move(images));
}

bool is_pure(const BraidWord& b) { return permutation(b).is_identity(); }

int degree(const BraidWord& b) {
  int sum = 0;
  for (const auto& l : b.letters()) sum += l.sign;
  return sum;
}

BraidWord half_twist(int n) {
  check_strands(n);
  std::vector<Letter> letters;
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = k; i >= 1; --i) letters.push_back({i, 1});
  }
  return BraidWord(n, std::move(letters));
}

BraidWord full_twist(int n) {
  check_strands(n);
  std::vector<Letter> letters;
  for (int rep = 0; rep < n; ++rep) {
    for (int i = 1; i <= n - 1; ++i) letters.push_back({i, 1});
  }
  return BraidWord(n, std::move(letters));
}

BraidWord pure_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw RangeError("alpha_{" + std::to_string(i) + "," + std::to_string(j) +
                     "} requires 1 <= i < j <= n = " + std::to_string(n));
  }
  std::vector<Letter> letters;
  for (int k = j - 1; k > i; --k) letters.push_back({k, 1});
  letters.push_back({i, 1});
  letters.push_back({i, 1});
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back({k, -1});
  return BraidWord(n, std::move(letters));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<Letter> letters;
  letters.reserve(b.length());
  for (const auto& l : b.letters()) letters.push_back(l.inverse());
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord include(const BraidWord& b, int m) {
  if (m < b.strands()) {
    throw DomainError("cannot include B_" + std::to_string(b.strands()) + " into B_" +
                      std::to_string(m));
  }
  return BraidWord(m, b.letters());
}

BraidWord random_braid(int n, std::size_t length, std::mt19937_64& rng) {
  check_strands(n);
  if (length == 0) return BraidWord(n);
  if (n < 2) throw DomainError("B_1 has no generators to sample");
  std::vector<Letter> letters;
  letters.reserve(length);
  const auto gens = static_cast<std::uint64_t>(n - 1);
  for (std::size_t k = 0; k < length; ++k) {
    const std::uint64_t r = rng();
    letters.push_back({static_cast<int>((r >> 1) % gens) + 1, (r & 1U) != 0 ? 1 : -1});
  }
  return BraidWord(n, std::move(letters));
}

BraidWord random_braid(int n, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_braid(n, length, rng);
}

BraidWord random_pure_braid(int n, std::size_t max_length, std::mt19937_64& rng, std::size_t max_attempts) {
  check_strands(n);
  if (n == 1) return BraidWord(1);
  const std::size_t half = max_length / 2;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const std::size_t length = 2 * static_cast<std::size_t>(rng() % (half + 1));
    BraidWord b = random_braid(n, length, rng);
    if (is_pure(b)) return b;
  }
  return BraidWord(n);
}

}  // namespace braid
