#pragma once

// Grothendieck-group side of Lusztig's character formula: finite KL vectors,
// LCF coefficients a_{y,x}, decomposition matrices and their inverses, and the
// SL2 / SL3 checks against Steinberg's tensor product theorem.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lusztig/character.hpp"
#include "lusztig/coxeter.hpp"
#include "lusztig/hecke.hpp"
#include "lusztig/matrix.hpp"

namespace lusztig {

// Where the rows of a decomposition matrix come from. Steinberg rows are the
// true simple characters, known here only for A1.
enum class MatrixSource { Lcf, Steinberg };

std::string to_string(MatrixSource s);

struct DecompositionMatrix {
  std::int64_t p = 0;
  MatrixSource source = MatrixSource::Lcf;
  // false: entry(i, j) = [L_i] coefficient on [nabla_j]
  // true:  entry(i, j) = [nabla_i : L_j]
  bool inverted = false;
  std::vector<OrbitEntry> labels;  // shared by rows and columns
  std::vector<bool> jantzen;       // per label
  IntMatrix entries;
};

class LcfCalculator {
 public:
  explicit LcfCalculator(RootDatum datum, std::size_t max_terms = CharacterRing::kDefaultMaxTerms);
  LcfCalculator(const LcfCalculator&) = delete;
  LcfCalculator& operator=(const LcfCalculator&) = delete;

  const AffineWeylGroup& group() const { return group_; }
  const HeckeAlgebra& hecke() const { return hecke_; }
  const CharacterRing& characters() const { return characters_; }

  // Coefficients (-1)^{l(x)-l(y)} P_{y,x}(1) of [Delta_y] in [L_x], keyed by
  // finite Weyl group index.
  std::map<std::size_t, std::int64_t> kl_vector_finite(std::size_t x) const;

  // a_{y,x} = (-1)^{l(x)+l(y)} P_{w0 y, w0 x}(1) for y <= x with y .p 0 dominant.
  std::map<AffineWeylElement, std::int64_t> lcf_coefficients(const AffineWeylElement& x, std::int64_t p) const;
  Character lcf_character(const AffineWeylElement& x, std::int64_t p) const;

  DecompositionMatrix decomposition_matrix(std::int64_t p, std::size_t max_len,
                                           MatrixSource source = MatrixSource::Lcf) const;
  DecompositionMatrix decomposition_matrix_bounded(std::int64_t p, std::int64_t max_weight,
                                                   MatrixSource source = MatrixSource::Lcf) const;
  DecompositionMatrix decomposition_matrix(std::int64_t p, std::vector<OrbitEntry> labels,
                                           MatrixSource source) const;

  // A1 only.
  bool sl2_lcf_valid(std::int64_t n, std::int64_t p) const;

  struct Sl3Fixtures {
    std::map<Weight, std::int64_t> below;  // x .p 0 = (p-2) rho, keyed by y .p 0
    std::map<Weight, std::int64_t> at;     // x .p 0 = p rho
  };
  // A2 only, p >= 3.
  Sl3Fixtures sl3_multiplicity_fixtures(std::int64_t p) const;

 private:
  void check_dominant_orbit(const AffineWeylElement& x, std::int64_t p) const;

  AffineWeylGroup group_;
  HeckeAlgebra hecke_;
  CharacterRing characters_;
};

// Exact inverse of a lower unitriangular decomposition matrix.
DecompositionMatrix invert_decomposition(const DecompositionMatrix& m);

// Base-p digits, least significant first; {0} for n = 0.
std::vector<std::int64_t> p_adic_digits(std::int64_t n, std::int64_t p);

}  // namespace lusztig
