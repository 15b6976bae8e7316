#include "lusztig/hecke.hpp"

#include <mutex>

#include "lusztig/errors.hpp"

namespace lusztig {

LaurentPolynomial HeckeElement::coefficient(const AffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add(const AffineWeylElement& x, const LaurentPolynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, p] : o.terms_) add(x, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, p] : o.terms_) add(x, -p);
  return *this;
}

HeckeElement operator*(const LaurentPolynomial& c, const HeckeElement& h) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [x, p] : h.terms_) out.terms_.emplace(x, c * p);
  return out;
}

HeckeElement HeckeAlgebra::kl_generator(std::size_t k) const {
  HeckeElement b = standard(group_.generator(k));
  b.add(group_.identity(), LaurentPolynomial::v());
  return b;
}

HeckeElement HeckeAlgebra::multiply_by_generator(const HeckeElement& h, std::size_t k, Side side) const {
  if (k >= group_.num_generators()) throw PreconditionError("generator index out of range");
  const LaurentPolynomial q = LaurentPolynomial::v_inverse() - LaurentPolynomial::v();
  HeckeElement out;
  for (const auto& [x, p] : h.terms()) {
    const AffineWeylElement xs =
        side == Side::Right ? group_.multiply_generator_right(x, k) : group_.multiply_generator_left(k, x);
    out.add(xs, p);
    if (group_.length(xs) < group_.length(x)) out.add(x, q * p);
  }
  return out;
}

HeckeElement HeckeAlgebra::multiply_by_kl_generator(const HeckeElement& h, std::size_t k, Side side) const {
  if (k >= group_.num_generators()) throw PreconditionError("generator index out of range");
  HeckeElement out;
  for (const auto& [x, p] : h.terms()) {
    const AffineWeylElement xs =
        side == Side::Right ? group_.multiply_generator_right(x, k) : group_.multiply_generator_left(k, x);
    out.add(xs, p);
    const bool down = group_.length(xs) < group_.length(x);
    out.add(x, (down ? LaurentPolynomial::v_inverse() : LaurentPolynomial::v()) * p);
  }
  return out;
}

const HeckeElement& HeckeAlgebra::bar_standard(const AffineWeylElement& x) const {
  {
    std::shared_lock lock(mutex_);
    auto it = bar_cache_.find(x);
    if (it != bar_cache_.end()) return it->second;
  }
  HeckeElement result;
  if (group_.length(x) == 0) {
    result = standard(x);
  } else {
    // x = x' s with l(x') < l(x); bar(h_x) = bar(h_x') (h_s + v - v^-1).
    std::size_t k = 0;
    while (!group_.is_right_descent(x, k)) ++k;
    const HeckeElement& prev = bar_standard(group_.multiply_generator_right(x, k));
    result = multiply_by_generator(prev, k, Side::Right);
    result += (LaurentPolynomial::v() - LaurentPolynomial::v_inverse()) * prev;
  }
  std::unique_lock lock(mutex_);
  return bar_cache_.try_emplace(x, std::move(result)).first->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [x, p] : h.terms()) out += p.bar() * bar_standard(x);
  return out;
}

const HeckeElement& HeckeAlgebra::kl_basis(const AffineWeylElement& x) const {
  {
    std::shared_lock lock(mutex_);
    auto it = kl_cache_.find(x);
    if (it != kl_cache_.end()) return it->second;
  }
  HeckeElement result;
  if (group_.length(x) == 0) {
    result = standard(x);
  } else {
    std::size_t k = 0;
    while (!group_.is_right_descent(x, k)) ++k;
    const AffineWeylElement prev_x = group_.multiply_generator_right(x, k);
    const HeckeElement& prev = kl_basis(prev_x);
    result = multiply_by_kl_generator(prev, k, Side::Right);
    for (const auto& [y, p] : prev.terms()) {
      if (y == prev_x || !group_.is_right_descent(y, k)) continue;
      const std::int64_t m = p.coefficient(1);
      if (m != 0) result -= LaurentPolynomial(m) * kl_basis(y);
    }
  }
  std::unique_lock lock(mutex_);
  return kl_cache_.try_emplace(x, std::move(result)).first->second;
}

LaurentPolynomial HeckeAlgebra::kl_polynomial(const AffineWeylElement& y, const AffineWeylElement& x) const {
  return kl_basis(x).coefficient(y);
}

std::int64_t HeckeAlgebra::mu(const AffineWeylElement& y, const AffineWeylElement& x) const {
  return kl_polynomial(y, x).coefficient(1);
}

std::size_t HeckeAlgebra::cache_size() const {
  std::shared_lock lock(mutex_);
  return kl_cache_.size();
}

}  // namespace lusztig
