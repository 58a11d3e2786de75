#include "braid/laurent.hpp"

#include <cstdlib>
#include <limits>

#include "braid/errors.hpp"

namespace braid {

namespace checked {

LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer coefficient overflow in addition");
  return r;
}

LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("integer coefficient overflow in multiplication");
  }
  return r;
}

}  // namespace checked

namespace {

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
    throw ArithmeticOverflow("exponent overflow");
  }
  return static_cast<int>(e);
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Coeff coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, checked::mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      r.add_term(checked_exponent(static_cast<long long>(e1) + e2), checked::mul(c1, c2));
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms_) r.add_term(e, checked::mul(c, -1));
  return r;
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_neg(const LaurentPoly& p) { return -p; }

LaurentPoly lp_pow(const LaurentPoly& p, int k) {
  if (k < 0) {
    if (p.terms().size() != 1 || std::llabs(p.terms().begin()->second) != 1) {
      throw DomainError("only monomials with unit coefficient have Laurent inverses");
    }
    const auto [e, c] = *p.terms().begin();
    return lp_pow(LaurentPoly::monomial(c, -e), -k);
  }
  LaurentPoly result(1);
  for (int i = 0; i < k; ++i) result *= p;
  return result;
}

LaurentPoly::Coeff lp_eval_int(const LaurentPoly& p, LaurentPoly::Coeff v) {
  LaurentPoly::Coeff sum = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 && v != 1 && v != -1) {
      throw DomainError("cannot evaluate a negative power at " + std::to_string(v) + " over the integers");
    }
    LaurentPoly::Coeff value = 1;
    if (v == -1) {
      value = (std::abs(e) % 2 == 0) ? 1 : -1;
    } else if (v != 1) {
      for (int i = 0; i < e; ++i) value = checked::mul(value, v);
    }
    sum = checked::add(sum, checked::mul(c, value));
  }
  return sum;
}

LaurentPoly lp_substitute_power(const LaurentPoly& p, int k) {
  if (k == 0) throw DomainError("substitution power must be nonzero");
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(checked_exponent(static_cast<long long>(e) * k), c);
  return LaurentPoly(std::move(terms));
}

std::string to_string(const LaurentPoly& p, const std::string& variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const auto mag = negative ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += variable;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMatrix::LaurentMatrix(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
  if (size < 0) throw DomainError("matrix size must be non-negative");
}

LaurentMatrix::LaurentMatrix(int size, std::vector<LaurentPoly> entries)
    : size_(size), entries_(std::move(entries)) {
  if (size < 0 || entries_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw DomainError("matrix entries do not form a square");
  }
}

LaurentMatrix LaurentMatrix::identity(int size) {
  LaurentMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

const LaurentPoly& LaurentMatrix::operator()(int row, int col) const {
  return entries_.at(static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col));
}

LaurentPoly& LaurentMatrix::operator()(int row, int col) {
  return entries_.at(static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col));
}

LaurentMatrix lm_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) throw DomainError("matrix size mismatch");
  const int n = a.size();
  LaurentMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) { return lm_mul(a, b); }

namespace {

// Laplace expansion along the first row over the given column set.
LaurentPoly minor_det(const LaurentMatrix& m, int row, std::vector<int>& cols) {
  if (cols.empty()) return LaurentPoly(1);
  LaurentPoly det;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const LaurentPoly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const int col = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    LaurentPoly term = entry * minor_det(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<long>(k), col);
    if (k % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

LaurentPoly lm_determinant(const LaurentMatrix& m) {
  std::vector<int> cols(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) cols[i] = i;
  return minor_det(m, 0, cols);
}

std::vector<std::vector<LaurentPoly::Coeff>> lm_eval_int(const LaurentMatrix& m, LaurentPoly::Coeff v) {
  std::vector<std::vector<LaurentPoly::Coeff>> out(static_cast<std::size_t>(m.size()),
                                                   std::vector<LaurentPoly::Coeff>(static_cast<std::size_t>(m.size())));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out[i][j] = lp_eval_int(m(i, j), v);
  }
  return out;
}

}  // namespace braid
