#pragma once

// Root data: weight lattice, roots and coroots, dominance, rho, Coxeter number,
// index of connection and Langlands duality.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lusztig/matrix.hpp"

namespace lusztig {

inline constexpr std::size_t kMaxRank = 8;

// Integer vector of length <= kMaxRank with inline storage. The tag keeps
// weights, coroots and root-lattice coordinates apart at compile time.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank);
  LatticeVector(std::initializer_list<std::int64_t> coords);
  static LatticeVector from_span(std::span<const std::int64_t> coords);

  std::size_t size() const { return rank_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const std::int64_t* begin() const { return c_.data(); }
  const std::int64_t* end() const { return c_.data() + rank_; }
  std::vector<std::int64_t> to_vector() const { return {begin(), end()}; }

  bool is_zero() const;
  std::int64_t sum() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(std::int64_t k);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::array<std::int64_t, kMaxRank> c_{};
};

struct WeightTag {};
struct CorootTag {};
struct RootCoordTag {};

// Element of X in the fundamental-weight basis: coordinate i is <lambda, alpha_i^vee>.
using Weight = LatticeVector<WeightTag>;
// Element of X^vee in the simple-coroot basis.
using Coroot = LatticeVector<CorootTag>;
// Element of the root lattice ZR in the simple-root basis.
using RootCoords = LatticeVector<RootCoordTag>;

template <class Tag>
struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector<Tag>& v) const noexcept {
    std::size_t h = v.size();
    for (std::int64_t x : v) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
    return h;
  }
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const LatticeVector<Tag>& v);

// "8" for rank one, "(3 3)" otherwise.
template <class Tag>
std::string to_label(const LatticeVector<Tag>& v);

enum class Series { A, B, C, G };
enum class Variant { SimplyConnected, Adjoint };

struct CartanType {
  Series series = Series::A;
  std::size_t rank = 1;

  // Accepts "A1", "A2", "A5", "B2", "C2", "G2".
  static CartanType parse(const std::string& tag);
  std::string to_string() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

Variant parse_variant(const std::string& tag);  // "sc" | "adjoint"
std::string to_string(Variant v);

struct Root {
  Weight weight;        // alpha in the fundamental-weight basis
  Coroot coroot;        // alpha^vee in the simple-coroot basis
  RootCoords simple;    // alpha in the simple-root basis
};

class RootDatum {
 public:
  static RootDatum build(CartanType type, Variant variant);

  const CartanType& type() const { return type_; }
  Variant variant() const { return variant_; }
  std::size_t rank() const { return type_.rank; }
  std::string label() const;

  // cartan()(i, j) = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_indices_; }
  const Root& simple_root(std::size_t i) const { return positive_roots_[simple_indices_[i]]; }

  // Columns are a Z-basis of X in fundamental-weight coordinates.
  const IntMatrix& lattice_basis() const { return lattice_basis_; }
  bool in_lattice(const Weight& w) const;

  std::int64_t pairing(const Weight& w, const Coroot& c) const;
  // <gamma, alpha^vee> for gamma given in simple-root coordinates.
  std::int64_t pairing(const RootCoords& gamma, const Coroot& c) const;

  Weight to_weight(const RootCoords& gamma) const;

  Weight rho() const;                // throws PreconditionError if rho is not in X
  Weight rho_coordinates() const;    // (1,...,1), always available as a rational shift
  std::size_t highest_root() const;  // index into positive_roots()
  // Root whose coroot is the highest coroot; equals highest_root() when simply laced.
  std::size_t highest_short_root() const;
  std::int64_t coxeter_number() const;
  std::int64_t index_of_connection() const;

  bool is_dominant(const Weight& w) const;
  bool is_p_restricted(const Weight& w, std::int64_t p) const;

  // s_alpha(x) = x - <x, alpha^vee> alpha on weights.
  Weight reflect(const Weight& w, std::size_t root_index) const;

  RootDatum dual() const;

  // Same series, variant, and Cartan matrix.
  bool isomorphic(const RootDatum& other) const;

 private:
  RootDatum() = default;
  static RootDatum from_cartan(CartanType type, Variant variant, IntMatrix cartan);
  void check_rank(std::size_t r) const;

  CartanType type_;
  Variant variant_ = Variant::SimplyConnected;
  IntMatrix cartan_;
  IntMatrix lattice_basis_;
  std::vector<Root> positive_roots_;
  std::vector<std::size_t> simple_indices_;
};

RootDatum build_root_datum(const std::string& series, Variant variant);

}  // namespace lusztig
