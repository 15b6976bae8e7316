#pragma once

// Characters in Z[X]: Weyl characters, Frobenius twists, tensor products,
// Steinberg's tensor product characters for SL2 and expansion in the basis of
// Weyl characters.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lusztig/coxeter.hpp"
#include "lusztig/lattice.hpp"

namespace lusztig {

// Finitely supported map weight -> multiplicity, zeros never stored.
using Character = std::map<Weight, std::int64_t>;

void add_term(Character& ch, const Weight& w, std::int64_t mult);
Character trivial_character(std::size_t rank);
std::int64_t dimension(const Character& ch);
Character frobenius_twist(const Character& ch, std::int64_t p);
Character scale(const Character& ch, std::int64_t k);
Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);

// "e^{-2} + 2e^{0} + e^{2}" for rank one, "e^{(1 0)} + ..." otherwise.
std::string render(const Character& ch);

// [{"weight": [...], "mult": m}, ...] in weight order.
nlohmann::json character_to_json(const Character& ch);
Character character_from_json(const nlohmann::json& j);

class CharacterRing {
 public:
  static constexpr std::size_t kDefaultMaxTerms = 1'000'000;

  explicit CharacterRing(RootDatum datum, std::size_t max_terms = kDefaultMaxTerms);

  const RootDatum& datum() const { return datum_; }
  const FiniteWeylGroup& weyl_group() const { return finite_; }
  std::size_t max_terms() const { return max_terms_; }

  Character weyl_character(const Weight& lambda) const;
  Character tensor(const Character& a, const Character& b) const;
  bool is_invariant(const Character& ch) const;
  std::map<Weight, std::int64_t> expand_in_standard_basis(const Character& ch) const;
  Character from_standard_basis(const std::map<Weight, std::int64_t>& coeffs) const;

  // prod_{a > 0} <l + rho, a^vee> / <rho, a^vee>
  std::int64_t weyl_dimension(const Weight& lambda) const;

  // Unique p-restricted l_i with l = sum p^i l_i; [0] for l = 0.
  std::vector<Weight> steinberg_digits(const Weight& lambda, std::int64_t p) const;
  // prod_i ch(nabla_{l_i})^{[p^i]}; A1 only.
  Character sl2_simple_character(std::int64_t n, std::int64_t p) const;

  // <l, 2 rho^vee>, the first key of the leading-term order.
  std::int64_t height(const Weight& w) const;
  // Strict total order refining dominance: height, then lexicographic.
  bool precedes(const Weight& a, const Weight& b) const;

 private:
  void check_size(const Character& ch) const;
  Weight leading(const Character& ch) const;

  RootDatum datum_;
  FiniteWeylGroup finite_;
  std::size_t max_terms_;
  Coroot two_rho_vee_;
};

}  // namespace lusztig
