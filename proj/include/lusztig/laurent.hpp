#pragma once

// Integer Laurent polynomials in v, stored sparsely.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lusztig {

class LaurentPolynomial {
 public:
  using Term = std::pair<int, std::int64_t>;  // (exponent, coefficient)

  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: implicit on purpose, 0 and 1 read naturally
  static LaurentPolynomial monomial(std::int64_t coeff, int exponent);
  static LaurentPolynomial v() { return monomial(1, 1); }
  static LaurentPolynomial v_inverse() { return monomial(1, -1); }

  // Terms sorted by exponent, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  int min_degree() const;  // both require a nonzero polynomial
  int max_degree() const;

  std::int64_t evaluate_at_one() const;
  // v -> v^{-1}
  LaurentPolynomial bar() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // "1 + 2*v - v^3"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPolynomial& o, std::int64_t sign);
  std::vector<Term> terms_;
};

std::int64_t evaluate_at_one(const LaurentPolynomial& p);

// {"exponent": coefficient, ...}
void to_json(nlohmann::json& j, const LaurentPolynomial& p);
void from_json(const nlohmann::json& j, LaurentPolynomial& p);

}  // namespace lusztig
