#pragma once

// Hecke algebra of an affine Weyl group (or of its finite parabolic W_f) over
// Z[v, v^-1], with standard basis h_x and Kazhdan-Lusztig basis b_x.
//
// Normalization: h_s^2 = 1 + (v^-1 - v) h_s, b_s = h_s + v,
// b_x = h_x + sum_{y < x} P_{y,x} h_y with P_{y,x} in v Z[v].

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>

#include "lusztig/coxeter.hpp"
#include "lusztig/laurent.hpp"

namespace lusztig {

class HeckeElement {
 public:
  using Terms = std::map<AffineWeylElement, LaurentPolynomial>;

  HeckeElement() = default;
  static HeckeElement basis(const AffineWeylElement& x) {
    HeckeElement h;
    h.add(x, 1);
    return h;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const AffineWeylElement& x) const;
  void add(const AffineWeylElement& x, const LaurentPolynomial& p);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPolynomial& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  Terms terms_;
};

enum class Side { Left, Right };

class HeckeAlgebra {
 public:
  // The group must outlive the algebra.
  explicit HeckeAlgebra(const AffineWeylGroup& group) : group_(group) {}

  const AffineWeylGroup& group() const { return group_; }

  HeckeElement standard(const AffineWeylElement& x) const { return HeckeElement::basis(x); }
  HeckeElement kl_generator(std::size_t k) const;  // b_s = h_s + v

  // h * h_s (Right) or h_s * h (Left).
  HeckeElement multiply_by_generator(const HeckeElement& h, std::size_t k, Side side) const;
  // h * b_s (Right) or b_s * h (Left).
  HeckeElement multiply_by_kl_generator(const HeckeElement& h, std::size_t k, Side side) const;

  // Ring involution with v -> v^-1 and h_s -> h_s^-1.
  HeckeElement bar(const HeckeElement& h) const;

  // Memoized; safe to call from several threads.
  const HeckeElement& kl_basis(const AffineWeylElement& x) const;
  LaurentPolynomial kl_polynomial(const AffineWeylElement& y, const AffineWeylElement& x) const;
  // Coefficient of v in P_{y,x}.
  std::int64_t mu(const AffineWeylElement& y, const AffineWeylElement& x) const;

  std::size_t cache_size() const;

 private:
  const HeckeElement& bar_standard(const AffineWeylElement& x) const;

  using Cache = std::unordered_map<AffineWeylElement, HeckeElement, AffineWeylElementHash>;

  const AffineWeylGroup& group_;
  mutable std::shared_mutex mutex_;
  mutable Cache kl_cache_;
  mutable Cache bar_cache_;
};

}  // namespace lusztig
