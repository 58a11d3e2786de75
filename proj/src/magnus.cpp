#include <algorithm>

#include "braid/combing.hpp"
#include "braid/errors.hpp"
#include "braid/laurent.hpp"
#include "braid/ordering.hpp"

namespace braid {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NCSeries::NCSeries(int rank, int max_degree) : rank_(rank), max_degree_(max_degree) {
  if (rank < 0 || max_degree < 0) throw DomainError("series rank and degree must be non-negative");
}

NCSeries::NCSeries(int rank, int max_degree, Terms terms) : NCSeries(rank, max_degree) {
  for (const auto& [m, c] : terms) {
    if (static_cast<int>(m.size()) > max_degree_) throw DomainError("term exceeds truncation degree");
    for (auto x : m) {
      if (x < 1 || x > rank_) throw RangeError("series variable out of range");
    }
    add_term(m, c);
  }
}

NCSeries NCSeries::one(int rank, int max_degree) {
  NCSeries s(rank, max_degree);
  s.add_term(Monomial{}, 1);
  return s;
}

std::int64_t NCSeries::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void NCSeries::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void NCSeries::multiply_by_letter(const Letter& l, std::size_t max_terms) {
  if (l.index < 1 || l.index > rank_) throw RangeError("series variable out of range");
  const auto x = static_cast<std::uint8_t>(l.index);
  // S * (1 + X) or S * (1 - X + X^2 - ...); the 1 keeps S itself.
  NCSeries result(rank_, max_degree_);
  result.terms_ = terms_;
  for (const auto& [m, c] : terms_) {
    Monomial grown = m;
    std::int64_t coeff = c;
    while (static_cast<int>(grown.size()) < max_degree_) {
      grown.push_back(x);
      if (l.sign < 0) coeff = checked::mul(coeff, -1);
      result.add_term(grown, coeff);
      if (l.sign > 0) break;
    }
    if (result.terms_.size() > max_terms) {
      throw BudgetExceeded("Magnus expansion exceeded " + std::to_string(max_terms) + " terms");
    }
  }
  terms_ = std::move(result.terms_);
}

std::string to_string(const NCSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    const bool neg = c < 0;
    const auto mag = neg ? -c : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (m.empty() || mag != 1) out += std::to_string(mag);
    for (auto x : m) out += "X" + std::to_string(x);
  }
  out += (out.empty() ? "O(" : " + O(") + std::to_string(s.max_degree() + 1) + ")";
  return out;
}

NCSeries magnus_expand(const FreeWord& w, int max_degree, const MagnusOptions& options) {
  NCSeries s = NCSeries::one(w.rank(), max_degree);
  const FreeWord reduced = free_reduce(w);
  for (const auto& l : reduced.letters()) s.multiply_by_letter(l, options.max_terms);
  return s;
}

OrderResult series_compare(const NCSeries& s, const NCSeries& t) {
  const auto cutoff = static_cast<std::size_t>(std::min(s.max_degree(), t.max_degree()));
  const GradedLex less;
  auto a = s.terms().begin();
  auto b = t.terms().begin();
  // Walk both in graded-lex order; a missing monomial has coefficient 0.
  while (a != s.terms().end() || b != t.terms().end()) {
    const bool take_a = b == t.terms().end() || (a != s.terms().end() && !less(b->first, a->first));
    const bool take_b = a == s.terms().end() || (b != t.terms().end() && !less(a->first, b->first));
    const Monomial& m = take_a ? a->first : b->first;
    if (m.size() > cutoff) break;
    const std::int64_t ca = take_a ? a->second : 0;
    const std::int64_t cb = take_b ? b->second : 0;
    if (ca != cb) return ca < cb ? OrderResult::Less : OrderResult::Greater;
    if (take_a) ++a;
    if (take_b) ++b;
  }
  return OrderResult::Equal;
}

OrderResult free_compare(const FreeWord& u, const FreeWord& v, const MagnusOptions& options) {
  if (u.rank() != v.rank()) throw DomainError("free_compare: rank mismatch");
  if (free_reduce(u) == free_reduce(v)) return OrderResult::Equal;
  for (int d = 2;; d *= 2) {
    const int degree = std::min(d, options.max_degree);
    const OrderResult r = series_compare(magnus_expand(u, degree, options), magnus_expand(v, degree, options));
    if (r != OrderResult::Equal) return r;
    if (degree >= options.max_degree) break;
  }
  throw BudgetExceeded("free_compare: distinct words " + to_string(u) + " and " + to_string(v) +
                       " agree up to degree " + std::to_string(options.max_degree));
}

OrderResult pure_compare(const BraidWord& a, const BraidWord& b, const MagnusOptions& options) {
  if (a.strands() != b.strands()) throw DomainError("pure_compare: strand counts differ");
  if (!is_pure(a) || !is_pure(b)) throw DomainError("pure_compare requires pure braids");
  const ArtinCoordinates ca = comb(a);
  const ArtinCoordinates cb = comb(b);
  for (std::size_t k = 0; k < ca.coords.size(); ++k) {
    const OrderResult r = free_compare(ca.coords[k], cb.coords[k], options);
    if (r != OrderResult::Equal) return r;
  }
  return OrderResult::Equal;
}

}  // namespace braid
