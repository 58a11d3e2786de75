#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braid {

/// Exact integer Laurent polynomial in one abstract variable. Coefficients
/// are 64-bit; any overflow raises ArithmeticOverflow.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(Coeff coeff, int exponent);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Coeff coeff(int exponent) const;
  [[nodiscard]] int min_exponent() const;
  [[nodiscard]] int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, Coeff c);
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_neg(const LaurentPoly& p);
/// p^k for k >= 0; for k < 0 only monomials (units) are invertible.
LaurentPoly lp_pow(const LaurentPoly& p, int k);
/// p(v). Negative exponents need v = +-1; otherwise DomainError.
LaurentPoly::Coeff lp_eval_int(const LaurentPoly& p, LaurentPoly::Coeff v);
/// Sends exponent e to k*e.
LaurentPoly lp_substitute_power(const LaurentPoly& p, int k);

/// Human-readable form, e.g. "-t^-1 + 2 + t^3".
std::string to_string(const LaurentPoly& p, const std::string& variable = "t");

/// Square matrix over LaurentPoly, row-major.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int size = 0);
  LaurentMatrix(int size, std::vector<LaurentPoly> entries);
  static LaurentMatrix identity(int size);

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] const LaurentPoly& operator()(int row, int col) const;
  LaurentPoly& operator()(int row, int col);
  [[nodiscard]] const std::vector<LaurentPoly>& entries() const { return entries_; }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int size_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Throws DomainError on size mismatch.
LaurentMatrix lm_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly lm_determinant(const LaurentMatrix& m);
/// Evaluates every entry at v.
std::vector<std::vector<LaurentPoly::Coeff>> lm_eval_int(const LaurentMatrix& m, LaurentPoly::Coeff v);

namespace checked {
LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
}  // namespace checked

}  // namespace braid
