#include "lusztig/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lusztig/errors.hpp"

namespace lusztig {

// ---------------------------------------------------------------- LatticeVector

template <class Tag>
LatticeVector<Tag>::LatticeVector(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxRank) throw UnsupportedError("rank exceeds kMaxRank");
}

template <class Tag>
LatticeVector<Tag>::LatticeVector(std::initializer_list<std::int64_t> coords)
    : LatticeVector(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

template <class Tag>
LatticeVector<Tag> LatticeVector<Tag>::from_span(std::span<const std::int64_t> coords) {
  LatticeVector v(coords.size());
  std::copy(coords.begin(), coords.end(), v.c_.begin());
  return v;
}

template <class Tag>
bool LatticeVector<Tag>::is_zero() const {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
}

template <class Tag>
std::int64_t LatticeVector<Tag>::sum() const {
  return std::accumulate(begin(), end(), std::int64_t{0});
}

template <class Tag>
LatticeVector<Tag>& LatticeVector<Tag>::operator+=(const LatticeVector& o) {
  if (o.rank_ != rank_) throw PreconditionError("lattice vector rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

template <class Tag>
LatticeVector<Tag>& LatticeVector<Tag>::operator-=(const LatticeVector& o) {
  if (o.rank_ != rank_) throw PreconditionError("lattice vector rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

template <class Tag>
LatticeVector<Tag>& LatticeVector<Tag>::operator*=(std::int64_t k) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
  return *this;
}

template <class Tag>
std::ostream& operator<<(std::ostream& os, const LatticeVector<Tag>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

template <class Tag>
std::string to_label(const LatticeVector<Tag>& v) {
  std::ostringstream os;
  if (v.size() == 1) {
    os << v[0];
  } else {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ')';
  }
  return os.str();
}

template class LatticeVector<WeightTag>;
template class LatticeVector<CorootTag>;
template class LatticeVector<RootCoordTag>;
template std::ostream& operator<<(std::ostream&, const Weight&);
template std::ostream& operator<<(std::ostream&, const Coroot&);
template std::ostream& operator<<(std::ostream&, const RootCoords&);
template std::string to_label(const Weight&);
template std::string to_label(const Coroot&);
template std::string to_label(const RootCoords&);

// ---------------------------------------------------------------- CartanType

CartanType CartanType::parse(const std::string& tag) {
  if (tag.size() < 2) throw UnsupportedError("unsupported root system '" + tag + "'");
  CartanType t;
  switch (tag[0]) {
    case 'A': t.series = Series::A; break;
    case 'B': t.series = Series::B; break;
    case 'C': t.series = Series::C; break;
    case 'G': t.series = Series::G; break;
    default: throw UnsupportedError("unsupported root system '" + tag + "'");
  }
  const std::string digits = tag.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 2)
    throw UnsupportedError("unsupported root system '" + tag + "'");
  t.rank = static_cast<std::size_t>(std::stoul(digits));
  const bool ok = (t.series == Series::A && t.rank >= 1 && t.rank <= kMaxRank) ||
                  (t.series != Series::A && t.rank == 2);
  if (!ok) throw UnsupportedError("unsupported root system '" + tag + "'");
  return t;
}

std::string CartanType::to_string() const {
  const char letter = series == Series::A ? 'A' : series == Series::B ? 'B' : series == Series::C ? 'C' : 'G';
  return letter + std::to_string(rank);
}

Variant parse_variant(const std::string& tag) {
  if (tag == "sc" || tag == "simply_connected") return Variant::SimplyConnected;
  if (tag == "adjoint" || tag == "ad") return Variant::Adjoint;
  throw UnsupportedError("unsupported variant '" + tag + "' (expected sc or adjoint)");
}

std::string to_string(Variant v) { return v == Variant::SimplyConnected ? "sc" : "adjoint"; }

// ---------------------------------------------------------------- RootDatum

namespace {

IntMatrix standard_cartan(const CartanType& t) {
  const std::size_t n = t.rank;
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  switch (t.series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
      break;
    case Series::B:  // alpha_1 long, alpha_2 short
      c(0, 1) = -1;
      c(1, 0) = -2;
      break;
    case Series::C:  // alpha_1 short, alpha_2 long
      c(0, 1) = -2;
      c(1, 0) = -1;
      break;
    case Series::G:  // alpha_1 short, alpha_2 long
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

bool all_nonnegative(const RootCoords& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

}  // namespace

namespace detail {

// Closure of the simple roots under simple reflections, tracking coroots
// alongside: if beta = w(alpha_i) then beta^vee = w(alpha_i^vee).
std::vector<Root> close_positive_roots(const IntMatrix& cartan, std::vector<std::size_t>& simple) {
  const std::size_t n = cartan.rows();
  std::vector<Root> roots;
  std::set<RootCoords> seen;
  std::deque<std::pair<RootCoords, Coroot>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords r(n);
    Coroot c(n);
    r[i] = 1;
    c[i] = 1;
    queue.emplace_back(r, c);
    seen.insert(r);
  }
  while (!queue.empty()) {
    auto [beta, beta_v] = queue.front();
    queue.pop_front();
    Weight w(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) w[k] += cartan(k, j) * beta[j];
    roots.push_back({w, beta_v, beta});
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t beta_on_i = 0;  // <beta, alpha_i^vee>
      std::int64_t i_on_beta = 0;  // <alpha_i, beta^vee>
      for (std::size_t j = 0; j < n; ++j) {
        beta_on_i += cartan(i, j) * beta[j];
        i_on_beta += beta_v[j] * cartan(j, i);
      }
      RootCoords image = beta;
      Coroot image_v = beta_v;
      image[i] -= beta_on_i;
      image_v[i] -= i_on_beta;
      if (image.is_zero() || !all_nonnegative(image)) continue;
      if (seen.insert(image).second) queue.emplace_back(image, image_v);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const auto ha = a.simple.sum(), hb = b.simple.sum();
    return ha != hb ? ha < hb : a.simple > b.simple;
  });
  simple.assign(n, 0);
  for (std::size_t idx = 0; idx < roots.size(); ++idx)
    if (roots[idx].simple.sum() == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (roots[idx].simple[i] == 1) simple[i] = idx;
  return roots;
}

}  // namespace detail


RootDatum RootDatum::from_cartan(CartanType type, Variant variant, IntMatrix cartan) {
  RootDatum d;
  d.type_ = type;
  d.variant_ = variant;
  d.cartan_ = std::move(cartan);
  d.positive_roots_ = detail::close_positive_roots(d.cartan_, d.simple_indices_);
  // X_sc is the fundamental-weight lattice; X_adj = ZR is spanned by the
  // simple roots, i.e. the columns of the Cartan matrix.
  d.lattice_basis_ = variant == Variant::SimplyConnected ? IntMatrix::identity(type.rank) : d.cartan_;
  return d;
}

RootDatum RootDatum::build(CartanType type, Variant variant) {
  return from_cartan(type, variant, standard_cartan(type));
}

RootDatum build_root_datum(const std::string& series, Variant variant) {
  return RootDatum::build(CartanType::parse(series), variant);
}

std::string RootDatum::label() const { return type_.to_string() + " " + to_string(variant_); }

void RootDatum::check_rank(std::size_t r) const {
  if (r != rank()) throw PreconditionError("vector rank does not match root datum rank");
}

bool RootDatum::in_lattice(const Weight& w) const {
  check_rank(w.size());
  // Solve B x = w over Z through the Smith form U B V = D.
  const SmithForm snf = smith_normal_form(lattice_basis_);
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t uw = 0;
    for (std::size_t j = 0; j < n; ++j) uw += snf.left(i, j) * w[j];
    const std::int64_t di = snf.diagonal(i, i);
    if (di == 0 ? uw != 0 : uw % di != 0) return false;
  }
  return true;
}

std::int64_t RootDatum::pairing(const Weight& w, const Coroot& c) const {
  check_rank(w.size());
  check_rank(c.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += w[i] * c[i];
  return s;
}

std::int64_t RootDatum::pairing(const RootCoords& gamma, const Coroot& c) const {
  return pairing(to_weight(gamma), c);
}

Weight RootDatum::to_weight(const RootCoords& gamma) const {
  check_rank(gamma.size());
  Weight w(rank());
  for (std::size_t k = 0; k < rank(); ++k)
    for (std::size_t j = 0; j < rank(); ++j) w[k] += cartan_(k, j) * gamma[j];
  return w;
}

Weight RootDatum::rho_coordinates() const {
  Weight r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = 1;
  return r;
}

Weight RootDatum::rho() const {
  Weight r = rho_coordinates();
  if (!in_lattice(r)) throw PreconditionError("rho is not in the character lattice of " + label());
  return r;
}

std::size_t RootDatum::highest_root() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < positive_roots_.size(); ++i)
    if (positive_roots_[i].simple.sum() > positive_roots_[best].simple.sum()) best = i;
  return best;
}

std::size_t RootDatum::highest_short_root() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < positive_roots_.size(); ++i)
    if (positive_roots_[i].coroot.sum() > positive_roots_[best].coroot.sum()) best = i;
  return best;
}

std::int64_t RootDatum::coxeter_number() const {
  return pairing(rho_coordinates(), positive_roots_[highest_short_root()].coroot) + 1;
}

std::int64_t RootDatum::index_of_connection() const {
  return std::llabs(determinant(cartan_)) / std::llabs(determinant(lattice_basis_));
}

bool RootDatum::is_dominant(const Weight& w) const {
  check_rank(w.size());
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 0; });
}

bool RootDatum::is_p_restricted(const Weight& w, std::int64_t p) const {
  if (p < 2) throw PreconditionError("p-restriction needs p >= 2");
  return is_dominant(w) && std::all_of(w.begin(), w.end(), [p](std::int64_t x) { return x < p; });
}

Weight RootDatum::reflect(const Weight& w, std::size_t root_index) const {
  const Root& r = positive_roots_.at(root_index);
  return w - pairing(w, r.coroot) * r.weight;
}

RootDatum RootDatum::dual() const {
  CartanType t = type_;
  if (t.series == Series::B) t.series = Series::C;
  else if (t.series == Series::C) t.series = Series::B;
  const Variant v = variant_ == Variant::SimplyConnected ? Variant::Adjoint : Variant::SimplyConnected;
  return from_cartan(t, v, cartan_.transpose());
}

bool RootDatum::isomorphic(const RootDatum& other) const {
  if (!(type_ == other.type_) || variant_ != other.variant_) return false;
  std::vector<std::size_t> perm(rank());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool same = true;
    for (std::size_t i = 0; i < rank() && same; ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (cartan_(i, j) != other.cartan_(perm[i], perm[j])) {
          same = false;
          break;
        }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace lusztig
