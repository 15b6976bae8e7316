#include "lusztig/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "lusztig/errors.hpp"

namespace lusztig {

// ---------------------------------------------------------------- FiniteWeylGroup

std::size_t FiniteWeylGroup::MatrixHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = v.size();
  for (std::int64_t x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
  return h;
}

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& datum) : rank_(datum.rank()) {
  const std::size_t n = rank_;
  const IntMatrix& cartan = datum.cartan();
  if (datum.positive_roots().size() > 64)
    throw ResourceError("finite Weyl group: more than 64 positive roots");

  // s_i(l) = l - l_i alpha_i on weights; s_i(b) = b - <b, alpha_i^vee> e_i on root coordinates.
  std::vector<IntMatrix> weight_gen, root_gen;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    IntMatrix r = IntMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) s(k, i) -= cartan(k, i);
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= cartan(i, j);
    weight_gen.push_back(std::move(s));
    root_gen.push_back(std::move(r));
  }

  elements_.push_back({IntMatrix::identity(n), IntMatrix::identity(n), {}, 0});
  index_.emplace(elements_[0].action.data(), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix m = elements_[head].action * weight_gen[i];
      if (index_.contains(m.data())) continue;
      if (elements_.size() >= kMaxOrder)
        throw ResourceError("finite Weyl group of " + datum.label() + " is too large to enumerate");
      FiniteWeylElement e;
      e.root_action = elements_[head].root_action * root_gen[i];
      e.word = elements_[head].word;
      e.word.push_back(static_cast<int>(i + 1));
      e.length = elements_[head].length + 1;
      e.action = std::move(m);
      index_.emplace(e.action.data(), elements_.size());
      elements_.push_back(std::move(e));
    }
  }

  for (std::size_t i = 0; i < n; ++i) simple_.push_back(*find(weight_gen[i]));

  inverse_.resize(size());
  for (std::size_t w = 0; w < size(); ++w) {
    std::size_t u = identity();
    const Word& word = elements_[w].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) u = multiply(u, simple_[*it - 1]);
    inverse_[w] = u;
  }

  const auto& roots = datum.positive_roots();
  for (const Root& a : roots) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m(k, j) -= a.weight[k] * a.coroot[j];
    const auto idx = find(m);
    if (!idx) throw InternalError("root reflection missing from the finite Weyl group");
    reflections_.push_back(*idx);
  }

  inverse_negative_.assign(size(), 0);
  for (std::size_t w = 0; w < size(); ++w) {
    const std::size_t u = inverse_[w];
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const RootCoords image = act(u, roots[k].simple);
      if (std::any_of(image.begin(), image.end(), [](std::int64_t x) { return x < 0; }))
        inverse_negative_[w] |= std::uint64_t{1} << k;
    }
  }

  longest_ = static_cast<std::size_t>(
      std::max_element(elements_.begin(), elements_.end(),
                       [](const auto& a, const auto& b) { return a.length < b.length; }) -
      elements_.begin());
}

std::size_t FiniteWeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto idx = find(elements_[a].action * elements_[b].action);
  if (!idx) throw InternalError("finite Weyl group not closed under multiplication");
  return *idx;
}

std::optional<std::size_t> FiniteWeylGroup::find(const IntMatrix& action) const {
  const auto it = index_.find(action.data());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Weight FiniteWeylGroup::act(std::size_t w, const Weight& x) const {
  const IntMatrix& m = elements_[w].action;
  Weight out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

RootCoords FiniteWeylGroup::act(std::size_t w, const RootCoords& x) const {
  const IntMatrix& m = elements_[w].root_action;
  RootCoords out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

// ---------------------------------------------------------------- AffineWeylGroup

AffineWeylGroup::AffineWeylGroup(RootDatum datum)
    : datum_(std::move(datum)), finite_(datum_) {
  theta_ = datum_.highest_short_root();
  coxeter_number_ = datum_.coxeter_number();
  reflection_theta_ = finite_.reflection(theta_);

  const std::size_t n = rank();
  for (const Root& a : datum_.positive_roots()) {
    std::vector<std::int64_t> row(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += a.coroot[i] * datum_.cartan()(i, j);
    pairing_rows_.push_back(std::move(row));
  }

  right_table_.assign(finite_.size(), std::vector<std::uint32_t>(n + 1));
  left_table_.assign(finite_.size(), std::vector<std::uint32_t>(n + 1));
  for (std::size_t w = 0; w < finite_.size(); ++w) {
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t s = k == 0 ? reflection_theta_ : finite_.simple(k - 1);
      right_table_[w][k] = static_cast<std::uint32_t>(finite_.multiply(w, s));
      left_table_[w][k] = static_cast<std::uint32_t>(finite_.multiply(s, w));
    }
  }
}

void AffineWeylGroup::check(const AffineWeylElement& x) const {
  if (x.finite >= finite_.size() || x.translation.size() != rank())
    throw PreconditionError("affine Weyl element does not belong to this group");
}

void AffineWeylGroup::require_p_at_least_h(std::int64_t p) const {
  if (p < coxeter_number_)
    throw PreconditionError("p = " + std::to_string(p) + " is below the Coxeter number h = " +
                            std::to_string(coxeter_number_));
}

AffineWeylElement AffineWeylGroup::identity() const { return {0, RootCoords(rank())}; }

AffineWeylElement AffineWeylGroup::generator(std::size_t k) const {
  if (k > rank()) throw PreconditionError("generator index out of range");
  if (k == 0)
    return {static_cast<std::uint32_t>(reflection_theta_), datum_.positive_roots()[theta_].simple};
  return from_finite(finite_.simple(k - 1));
}

std::vector<AffineWeylElement> AffineWeylGroup::generators() const {
  std::vector<AffineWeylElement> out;
  for (std::size_t k = 0; k < num_generators(); ++k) out.push_back(generator(k));
  return out;
}

AffineWeylElement AffineWeylGroup::translation(const RootCoords& gamma) const {
  if (gamma.size() != rank()) throw PreconditionError("translation rank mismatch");
  return {0, gamma};
}

AffineWeylElement AffineWeylGroup::from_finite(std::size_t w) const {
  return {static_cast<std::uint32_t>(w), RootCoords(rank())};
}

AffineWeylElement AffineWeylGroup::from_word(std::span<const int> word) const {
  AffineWeylElement x = identity();
  for (int k : word) {
    if (k < 0 || static_cast<std::size_t>(k) > rank())
      throw PreconditionError("generator index out of range in word");
    x = multiply_generator_right(x, static_cast<std::size_t>(k));
  }
  return x;
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check(x);
  check(y);
  return {static_cast<std::uint32_t>(finite_.multiply(x.finite, y.finite)),
          x.translation + finite_.act(x.finite, y.translation)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  check(x);
  const std::size_t winv = finite_.inverse(x.finite);
  return {static_cast<std::uint32_t>(winv), -finite_.act(winv, x.translation)};
}

AffineWeylElement AffineWeylGroup::multiply_generator_right(const AffineWeylElement& x, std::size_t k) const {
  AffineWeylElement out{right_table_[x.finite][k], x.translation};
  if (k == 0) out.translation += finite_.act(x.finite, datum_.positive_roots()[theta_].simple);
  return out;
}

AffineWeylElement AffineWeylGroup::multiply_generator_left(std::size_t k, const AffineWeylElement& x) const {
  const std::size_t s = k == 0 ? reflection_theta_ : finite_.simple(k - 1);
  AffineWeylElement out{left_table_[x.finite][k], finite_.act(s, x.translation)};
  if (k == 0) out.translation += datum_.positive_roots()[theta_].simple;
  return out;
}

std::size_t AffineWeylGroup::length(const AffineWeylElement& x) const {
  check(x);
  const std::uint64_t mask = finite_.inversion_mask(x.finite);
  std::int64_t total = 0;
  for (std::size_t a = 0; a < pairing_rows_.size(); ++a) {
    std::int64_t pr = 0;
    for (std::size_t j = 0; j < rank(); ++j) pr += x.translation[j] * pairing_rows_[a][j];
    total += std::llabs(pr - static_cast<std::int64_t>((mask >> a) & 1u));
  }
  return static_cast<std::size_t>(total);
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, std::size_t k) const {
  return length(multiply_generator_right(x, k)) < length(x);
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& x, std::size_t k) const {
  return length(multiply_generator_left(k, x)) < length(x);
}

Word AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  Word word;
  AffineWeylElement cur = x;
  std::size_t len = length(cur);
  while (len > 0) {
    bool found = false;
    for (std::size_t k = 0; k < num_generators(); ++k) {
      AffineWeylElement next = multiply_generator_left(k, cur);
      const std::size_t l = length(next);
      if (l < len) {
        word.push_back(static_cast<int>(k));
        cur = next;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no descent found for a non-identity element");
  }
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& y, const AffineWeylElement& x) const {
  // If s x < x then y <= x iff min(y, sy) <= sx.
  AffineWeylElement a = y, b = x;
  std::size_t la = length(a), lb = length(b);
  for (;;) {
    if (la == 0) return true;
    if (la >= lb) return la == lb && a == b;
    std::size_t k = 0;
    AffineWeylElement sb;
    for (; k < num_generators(); ++k) {
      sb = multiply_generator_left(k, b);
      if (length(sb) < lb) break;
    }
    b = sb;
    --lb;
    AffineWeylElement sa = multiply_generator_left(k, a);
    const std::size_t lsa = length(sa);
    if (lsa < la) {
      a = sa;
      la = lsa;
    }
  }
}

bool AffineWeylGroup::is_min_coset_rep(const AffineWeylElement& x) const {
  const std::size_t l = length(x);
  for (std::size_t k = 1; k < num_generators(); ++k)
    if (length(multiply_generator_left(k, x)) < l) return false;
  return true;
}

Weight AffineWeylGroup::dot(const AffineWeylElement& x, const Weight& lambda, std::int64_t p) const {
  check(x);
  if (lambda.size() != rank()) throw PreconditionError("weight rank mismatch");
  const Weight rho = datum_.rho_coordinates();
  return finite_.act(x.finite, lambda + rho) - rho + p * datum_.to_weight(x.translation);
}

bool AffineWeylGroup::is_p_regular(const Weight& lambda, std::int64_t p) const {
  if (p < 1) throw PreconditionError("p must be positive");
  const Weight shifted = lambda + datum_.rho_coordinates();
  for (const Root& a : datum_.positive_roots())
    if (datum_.pairing(shifted, a.coroot) % p == 0) return false;
  return true;
}

AlcoveNormalForm AffineWeylGroup::normalize(const Weight& lambda, std::int64_t p) const {
  if (p < 1) throw PreconditionError("p must be positive");
  if (lambda.size() != rank()) throw PreconditionError("weight rank mismatch");
  constexpr std::size_t kMaxSteps = 1'000'000;
  const Root& theta = datum_.positive_roots()[theta_];
  Weight mu = lambda + datum_.rho_coordinates();
  AffineWeylElement x = identity();
  for (std::size_t step = 0;; ++step) {
    if (step >= kMaxSteps) throw InternalError("alcove normalization did not terminate");
    bool moved = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (mu[i] < 0) {
        mu = mu - mu[i] * datum_.simple_root(i).weight;
        x = multiply_generator_right(x, i + 1);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    const std::int64_t top = datum_.pairing(mu, theta.coroot);
    if (top > p) {
      mu = mu - (top - p) * theta.weight;
      x = multiply_generator_right(x, 0);
      continue;
    }
    break;
  }
  return {mu - datum_.rho_coordinates(), x};
}

bool AffineWeylGroup::same_block(const Weight& lambda, const Weight& mu, std::int64_t p) const {
  return normalize(lambda, p).canonical == normalize(mu, p).canonical;
}

std::optional<AffineWeylElement> AffineWeylGroup::element_for_weight(const Weight& lambda, std::int64_t p) const {
  AlcoveNormalForm nf = normalize(lambda, p);
  if (!nf.canonical.is_zero()) return std::nullopt;
  return nf.element;
}

bool AffineWeylGroup::jantzen_condition(const AffineWeylElement& x, std::int64_t p) const {
  const Weight shifted = dot(x, Weight(rank()), p) + datum_.rho_coordinates();
  const std::int64_t bound = p * (p - coxeter_number_ + 2);
  for (const Root& a : datum_.positive_roots())
    if (datum_.pairing(shifted, a.coroot) > bound) return false;
  return true;
}

OrbitEntry AffineWeylGroup::make_entry(const AffineWeylElement& x, std::int64_t p) const {
  return {x, dot(x, Weight(rank()), p), length(x), reduced_word(x)};
}

namespace {

void sort_by_length_then_word(std::vector<OrbitEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
    return a.length != b.length ? a.length < b.length : a.word < b.word;
  });
}

}  // namespace

std::vector<OrbitEntry> AffineWeylGroup::dominant_orbit(std::int64_t p, std::size_t max_len) const {
  require_p_at_least_h(p);
  // ^fW is closed under taking right-reduced prefixes, so grow it letter by letter.
  std::vector<AffineWeylElement> layer{identity()};
  std::vector<OrbitEntry> out;
  for (std::size_t len = 0;; ++len) {
    for (const auto& x : layer)
      if (datum_.is_dominant(dot(x, Weight(rank()), p))) out.push_back(make_entry(x, p));
    if (len == max_len) break;
    std::set<AffineWeylElement> next;
    for (const auto& x : layer)
      for (std::size_t k = 0; k < num_generators(); ++k) {
        AffineWeylElement y = multiply_generator_right(x, k);
        if (length(y) == len + 1 && is_min_coset_rep(y)) next.insert(y);
      }
    layer.assign(next.begin(), next.end());
  }
  sort_by_length_then_word(out);
  return out;
}

std::vector<OrbitEntry> AffineWeylGroup::dominant_orbit_bounded(std::int64_t p, std::int64_t max_coord) const {
  require_p_at_least_h(p);
  if (max_coord < 0) return {};
  std::vector<OrbitEntry> out;
  Weight lambda(rank());
  // Odometer over the box [0, max_coord]^rank.
  for (;;) {
    if (auto x = element_for_weight(lambda, p)) out.push_back(make_entry(*x, p));
    std::size_t i = 0;
    while (i < rank() && lambda[i] == max_coord) lambda[i++] = 0;
    if (i == rank()) break;
    ++lambda[i];
  }
  sort_by_length_then_word(out);
  return out;
}

std::int64_t AffineWeylGroup::count_p_restricted_in_orbit(std::int64_t p) const {
  require_p_at_least_h(p);
  std::int64_t count = 0;
  Weight lambda(rank());
  for (;;) {
    if (normalize(lambda, p).canonical.is_zero()) ++count;
    std::size_t i = 0;
    while (i < rank() && lambda[i] == p - 1) lambda[i++] = 0;
    if (i == rank()) break;
    ++lambda[i];
  }
  return count;
}

}  // namespace lusztig
