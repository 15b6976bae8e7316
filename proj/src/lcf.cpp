#include "lusztig/lcf.hpp"

#include <algorithm>

#include "lusztig/errors.hpp"

namespace lusztig {

std::string to_string(MatrixSource s) { return s == MatrixSource::Lcf ? "lcf" : "steinberg"; }

LcfCalculator::LcfCalculator(RootDatum datum, std::size_t max_terms)
    : group_(datum), hecke_(group_), characters_(std::move(datum), max_terms) {}

std::map<std::size_t, std::int64_t> LcfCalculator::kl_vector_finite(std::size_t x) const {
  const FiniteWeylGroup& wf = group_.finite();
  if (x >= wf.size()) throw PreconditionError("finite Weyl group index out of range");
  std::map<std::size_t, std::int64_t> out;
  for (const auto& [y, poly] : hecke_.kl_basis(group_.from_finite(x)).terms()) {
    const std::int64_t sign = (wf.length(x) + wf.length(y.finite)) % 2 ? -1 : 1;
    const std::int64_t c = sign * poly.evaluate_at_one();
    if (c != 0) out[y.finite] = c;
  }
  return out;
}

void LcfCalculator::check_dominant_orbit(const AffineWeylElement& x, std::int64_t p) const {
  group_.require_p_at_least_h(p);
  if (!group_.datum().is_dominant(group_.dot(x, Weight(group_.rank()), p)))
    throw PreconditionError("x .p 0 is not dominant");
}

std::map<AffineWeylElement, std::int64_t> LcfCalculator::lcf_coefficients(const AffineWeylElement& x,
                                                                          std::int64_t p) const {
  check_dominant_orbit(x, p);
  const AffineWeylElement w0 = group_.longest_finite();
  const std::size_t lx = group_.length(x);
  std::map<AffineWeylElement, std::int64_t> out;
  for (const auto& [z, poly] : hecke_.kl_basis(group_.multiply(w0, x)).terms()) {
    const AffineWeylElement y = group_.multiply(w0, z);  // w0 is an involution
    if (!group_.datum().is_dominant(group_.dot(y, Weight(group_.rank()), p))) continue;
    if (!group_.bruhat_leq(y, x)) continue;
    const std::int64_t sign = (lx + group_.length(y)) % 2 ? -1 : 1;
    const std::int64_t c = sign * poly.evaluate_at_one();
    if (c != 0) out[y] = c;
  }
  return out;
}

Character LcfCalculator::lcf_character(const AffineWeylElement& x, std::int64_t p) const {
  Character out;
  for (const auto& [y, a] : lcf_coefficients(x, p))
    out = out + scale(characters_.weyl_character(group_.dot(y, Weight(group_.rank()), p)), a);
  return out;
}

DecompositionMatrix LcfCalculator::decomposition_matrix(std::int64_t p, std::size_t max_len,
                                                        MatrixSource source) const {
  return decomposition_matrix(p, group_.dominant_orbit(p, max_len), source);
}

DecompositionMatrix LcfCalculator::decomposition_matrix_bounded(std::int64_t p, std::int64_t max_weight,
                                                                MatrixSource source) const {
  return decomposition_matrix(p, group_.dominant_orbit_bounded(p, max_weight), source);
}

DecompositionMatrix LcfCalculator::decomposition_matrix(std::int64_t p, std::vector<OrbitEntry> labels,
                                                        MatrixSource source) const {
  group_.require_p_at_least_h(p);
  if (source == MatrixSource::Steinberg && !(group_.datum().type() == CartanType{Series::A, 1}))
    throw UnsupportedError("Steinberg rows are only available for A1");
  std::sort(labels.begin(), labels.end(), [this](const OrbitEntry& a, const OrbitEntry& b) {
    return characters_.precedes(a.weight, b.weight);
  });
  const std::size_t n = labels.size();
  std::map<Weight, std::size_t> column;
  std::map<AffineWeylElement, std::size_t> column_of_element;
  for (std::size_t i = 0; i < n; ++i) {
    column[labels[i].weight] = i;
    column_of_element[labels[i].element] = i;
  }

  DecompositionMatrix m;
  m.p = p;
  m.source = source;
  m.entries = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.jantzen.push_back(group_.jantzen_condition(labels[i].element, p));
    if (source == MatrixSource::Lcf) {
      for (const auto& [y, a] : lcf_coefficients(labels[i].element, p)) {
        auto it = column_of_element.find(y);
        if (it == column_of_element.end()) throw InternalError("LCF term outside the label set");
        m.entries(i, it->second) = a;
      }
    } else {
      const Character simple = characters_.sl2_simple_character(labels[i].weight[0], p);
      for (const auto& [w, c] : characters_.expand_in_standard_basis(simple)) {
        auto it = column.find(w);
        if (it == column.end()) throw InternalError("Steinberg constituent outside the label set");
        m.entries(i, it->second) = c;
      }
    }
  }
  m.labels = std::move(labels);
  return m;
}

bool LcfCalculator::sl2_lcf_valid(std::int64_t n, std::int64_t p) const {
  if (!(group_.datum().type() == CartanType{Series::A, 1})) throw UnsupportedError("sl2_lcf_valid needs A1");
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  group_.require_p_at_least_h(p);
  const auto x = group_.element_for_weight(Weight{n}, p);
  if (!x || n < 0) throw PreconditionError(std::to_string(n) + " is not a dominant weight in W .p 0");
  return lcf_character(*x, p) == characters_.sl2_simple_character(n, p);
}

LcfCalculator::Sl3Fixtures LcfCalculator::sl3_multiplicity_fixtures(std::int64_t p) const {
  if (!(group_.datum().type() == CartanType{Series::A, 2})) throw UnsupportedError("SL3 fixtures need A2");
  if (p < 3) throw PreconditionError("SL3 fixtures need p >= 3");
  auto by_weight = [&](const Weight& target) {
    const auto x = group_.element_for_weight(target, p);
    if (!x) throw InternalError("fixture weight is not in the principal orbit");
    std::map<Weight, std::int64_t> out;
    for (const auto& [y, a] : lcf_coefficients(*x, p)) out[group_.dot(y, Weight{0, 0}, p)] = a;
    return out;
  };
  return {by_weight(Weight{p - 2, p - 2}), by_weight(Weight{p, p})};
}

DecompositionMatrix invert_decomposition(const DecompositionMatrix& m) {
  const std::size_t n = m.entries.rows();
  if (!m.entries.is_square()) throw PreconditionError("decomposition matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.entries(i, i) != 1) throw PreconditionError("decomposition matrix is not unitriangular");
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.entries(i, j) != 0) throw PreconditionError("decomposition matrix is not lower triangular");
  }
  // A is lower unitriangular; solve A B = I column by column.
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = c; i < n; ++i) {
      std::int64_t s = i == c ? 1 : 0;
      for (std::size_t k = c; k < i; ++k) s -= m.entries(i, k) * inv(k, c);
      inv(i, c) = s;
    }
  }
  DecompositionMatrix out = m;
  out.inverted = !m.inverted;
  // [L_x] = sum_y A[x][y] [nabla_y] inverts to [nabla_y] = sum_x B[y][x] [L_x].
  out.entries = inv;
  return out;
}

std::vector<std::int64_t> p_adic_digits(std::int64_t n, std::int64_t p) {
  if (p < 2 || n < 0) throw PreconditionError("p-adic digits need p >= 2 and n >= 0");
  std::vector<std::int64_t> out;
  do {
    out.push_back(n % p);
    n /= p;
  } while (n > 0);
  return out;
}

}  // namespace lusztig
