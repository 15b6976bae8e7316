#pragma once

// Finite Weyl group W_f and affine Weyl group W = W_f x| ZR.
//
// Affine elements are stored as (finite part w, translation gamma) meaning
// t_gamma * w, so equality is structural and words are derived on demand.
// Generators are numbered 0..rank: generator 0 is the affine reflection
// s_0 = t_theta s_theta (theta^vee the highest coroot), generator i >= 1 is the
// finite simple reflection s_i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lusztig/lattice.hpp"
#include "lusztig/matrix.hpp"

namespace lusztig {

using Word = std::vector<int>;

struct FiniteWeylElement {
  IntMatrix action;       // on X in fundamental-weight coordinates
  IntMatrix root_action;  // on ZR in simple-root coordinates
  Word word;              // one reduced expression in the simple reflections (1-based)
  std::size_t length = 0;
};

class FiniteWeylGroup {
 public:
  // Enumerates the group; throws ResourceError above kMaxOrder elements.
  explicit FiniteWeylGroup(const RootDatum& datum);

  static constexpr std::size_t kMaxOrder = 5040;

  std::size_t size() const { return elements_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t longest() const { return longest_; }
  std::size_t simple(std::size_t i) const { return simple_[i]; }
  // Reflection s_alpha for the positive root with the given index.
  std::size_t reflection(std::size_t root_index) const { return reflections_[root_index]; }

  const FiniteWeylElement& element(std::size_t w) const { return elements_[w]; }
  std::size_t length(std::size_t w) const { return elements_[w].length; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::optional<std::size_t> find(const IntMatrix& action) const;

  Weight act(std::size_t w, const Weight& x) const;
  RootCoords act(std::size_t w, const RootCoords& x) const;

  // Bit k is set iff w^{-1} sends positive root k to a negative root.
  std::uint64_t inversion_mask(std::size_t w) const { return inverse_negative_[w]; }

 private:
  struct MatrixHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
  };

  std::size_t rank_ = 0;
  std::vector<FiniteWeylElement> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> reflections_;
  std::vector<std::uint64_t> inverse_negative_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, MatrixHash> index_;
  std::size_t longest_ = 0;
};

struct AffineWeylElement {
  std::uint32_t finite = 0;  // index into FiniteWeylGroup
  RootCoords translation;    // gamma in t_gamma * w, simple-root coordinates

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement&, const AffineWeylElement&) = default;
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept {
    return LatticeVectorHash<RootCoordTag>{}(x.translation) * 31u + x.finite;
  }
};

// x in ^fW with x .p 0 dominant, as enumerated by the orbit routines.
struct OrbitEntry {
  AffineWeylElement element;
  Weight weight;
  std::size_t length = 0;
  Word word;
};

// Result of folding a weight into the closure of the fundamental alcove:
// element .p canonical == the original weight.
struct AlcoveNormalForm {
  Weight canonical;
  AffineWeylElement element;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  const FiniteWeylGroup& finite() const { return finite_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t num_generators() const { return datum_.rank() + 1; }
  std::int64_t coxeter_number() const { return coxeter_number_; }

  AffineWeylElement identity() const;
  AffineWeylElement generator(std::size_t k) const;
  std::vector<AffineWeylElement> generators() const;
  AffineWeylElement translation(const RootCoords& gamma) const;
  AffineWeylElement from_finite(std::size_t w) const;
  AffineWeylElement from_word(std::span<const int> word) const;
  AffineWeylElement longest_finite() const { return from_finite(finite_.longest()); }

  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  AffineWeylElement multiply_generator_right(const AffineWeylElement& x, std::size_t k) const;
  AffineWeylElement multiply_generator_left(std::size_t k, const AffineWeylElement& x) const;

  // Iwahori-Matsumoto length.
  std::size_t length(const AffineWeylElement& x) const;
  bool is_right_descent(const AffineWeylElement& x, std::size_t k) const;
  bool is_left_descent(const AffineWeylElement& x, std::size_t k) const;
  // Reduced word from repeated left descents, smallest generator index first.
  Word reduced_word(const AffineWeylElement& x) const;

  bool bruhat_leq(const AffineWeylElement& y, const AffineWeylElement& x) const;
  // Membership in ^fW: l(s x) > l(x) for every finite simple s.
  bool is_min_coset_rep(const AffineWeylElement& x) const;

  // p-dilated dot action: w .p l = w(l + rho) - rho, t_gamma .p l = l + p gamma.
  Weight dot(const AffineWeylElement& x, const Weight& lambda, std::int64_t p) const;

  bool is_p_regular(const Weight& lambda, std::int64_t p) const;
  AlcoveNormalForm normalize(const Weight& lambda, std::int64_t p) const;
  bool same_block(const Weight& lambda, const Weight& mu, std::int64_t p) const;
  // x with x .p 0 == lambda, when lambda lies in W .p 0.
  std::optional<AffineWeylElement> element_for_weight(const Weight& lambda, std::int64_t p) const;

  bool jantzen_condition(const AffineWeylElement& x, std::int64_t p) const;

  // All x in ^fW with l(x) <= max_len and x .p 0 dominant; sorted by length,
  // then lexicographically by reduced word.
  std::vector<OrbitEntry> dominant_orbit(std::int64_t p, std::size_t max_len) const;
  // Same orbit, restricted to weights with every coordinate <= max_coord.
  std::vector<OrbitEntry> dominant_orbit_bounded(std::int64_t p, std::int64_t max_coord) const;

  std::int64_t count_p_restricted_in_orbit(std::int64_t p) const;

  void require_p_at_least_h(std::int64_t p) const;

 private:
  void check(const AffineWeylElement& x) const;
  OrbitEntry make_entry(const AffineWeylElement& x, std::int64_t p) const;

  RootDatum datum_;
  FiniteWeylGroup finite_;
  std::size_t theta_ = 0;  // highest short root index
  std::int64_t coxeter_number_ = 0;
  std::size_t reflection_theta_ = 0;
  // pairing_rows_[a][j] = <alpha_j, alpha_a^vee>, so <gamma, alpha_a^vee> = sum_j gamma_j * row[j]
  std::vector<std::vector<std::int64_t>> pairing_rows_;
  // Per finite element: w * s_k and s_k * w for k = 0 (s_theta) .. rank.
  std::vector<std::vector<std::uint32_t>> right_table_;
  std::vector<std::vector<std::uint32_t>> left_table_;
};

}  // namespace lusztig
