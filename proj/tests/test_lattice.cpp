#include "doctest.h"

#include <set>

#include "lusztig/errors.hpp"
#include "lusztig/lattice.hpp"

using namespace lusztig;

namespace {

// |X / ZR| from Smith forms: product of invariant factors of the simple roots
// divided by that of the basis of X.
std::int64_t snf_index(const RootDatum& d) {
  std::int64_t roots = 1;
  for (auto f : smith_normal_form(d.cartan()).invariant_factors) roots *= f;
  std::int64_t base = 1;
  for (auto f : smith_normal_form(d.lattice_basis()).invariant_factors) base *= f;
  return roots / base;
}

Weight sum_of_positive_roots(const RootDatum& d) {
  Weight s(d.rank());
  for (const auto& a : d.positive_roots()) s += a.weight;
  return s;
}

RootDatum sc(const char* s) { return build_root_datum(s, Variant::SimplyConnected); }

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(sc("A1").positive_roots().size() == 1);
  CHECK(sc("A2").positive_roots().size() == 3);
  CHECK(sc("B2").positive_roots().size() == 4);
  CHECK(sc("C2").positive_roots().size() == 4);
  CHECK(sc("G2").positive_roots().size() == 6);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(build_root_datum("A" + std::to_string(n), Variant::SimplyConnected).positive_roots().size() ==
          n * (n + 1) / 2);
}

TEST_CASE("A1 root is twice the fundamental weight") {
  auto d = sc("A1");
  CHECK(d.positive_roots()[0].weight == Weight{2});
  CHECK(d.pairing(Weight{1}, d.positive_roots()[0].coroot) == 1);
  CHECK(d.pairing(Weight{0}, d.positive_roots()[0].coroot) == 0);
}

TEST_CASE("root datum axioms") {
  for (const char* s : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    CAPTURE(s);
    auto d = sc(s);
    const auto& c = d.cartan();
    std::set<Weight> roots;
    for (const auto& a : d.positive_roots()) {
      CHECK(d.pairing(a.weight, a.coroot) == 2);
      CHECK(d.to_weight(a.simple) == a.weight);
      roots.insert(a.weight);
      roots.insert(-a.weight);
    }
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = 0; j < d.rank(); ++j) {
        if (i == j) CHECK(c(i, i) == 2);
        else CHECK(c(i, j) <= 0);
        CHECK(d.pairing(d.simple_root(j).weight, d.simple_root(i).coroot) == c(i, j));
      }
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k)
      for (const auto& r : roots) CHECK(roots.contains(d.reflect(r, k)));
  }
}

TEST_CASE("rho is half the sum of positive roots") {
  for (const char* s : {"A1", "A2", "A4", "B2", "C2", "G2"}) {
    CAPTURE(s);
    auto d = sc(s);
    CHECK(sum_of_positive_roots(d) == 2 * d.rho());
    for (std::size_t i = 0; i < d.rank(); ++i) CHECK(d.pairing(d.rho(), d.simple_root(i).coroot) == 1);
  }
  CHECK(sc("A1").rho() == Weight{1});
  CHECK(sc("G2").rho() == Weight{1, 1});
  CHECK_THROWS_AS(build_root_datum("A1", Variant::Adjoint).rho(), PreconditionError);
}

TEST_CASE("Coxeter numbers") {
  CHECK(sc("A1").coxeter_number() == 2);
  CHECK(sc("A2").coxeter_number() == 3);
  CHECK(sc("A5").coxeter_number() == 6);
  CHECK(sc("B2").coxeter_number() == 4);
  CHECK(sc("C2").coxeter_number() == 4);
  CHECK(sc("G2").coxeter_number() == 6);
  auto a2 = sc("A2");
  CHECK(a2.pairing(a2.rho(), a2.positive_roots()[a2.highest_root()].coroot) == 2);
}

TEST_CASE("dominance and restriction") {
  auto a1 = sc("A1");
  auto a2 = sc("A2");
  for (std::int64_t p : {2, 3, 5, 7}) {
    CHECK(a1.is_p_restricted(Weight{0}, p));
    CHECK(a1.is_p_restricted(Weight{p - 1}, p));
    CHECK_FALSE(a1.is_p_restricted(Weight{p}, p));
    CHECK(a2.is_p_restricted(Weight{p - 1, p - 1}, p));
  }
  CHECK_FALSE(a2.is_dominant(Weight{1, -1}));
}

TEST_CASE("index of connection against Smith form") {
  CHECK(sc("A1").index_of_connection() == 2);
  CHECK(sc("A2").index_of_connection() == 3);
  CHECK(sc("G2").index_of_connection() == 1);
  CHECK(sc("B2").index_of_connection() == 2);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto d = build_root_datum("A" + std::to_string(n), Variant::SimplyConnected);
    CHECK(d.index_of_connection() == static_cast<std::int64_t>(n + 1));
    CHECK(snf_index(d) == static_cast<std::int64_t>(n + 1));
  }
  CHECK(build_root_datum("A3", Variant::Adjoint).index_of_connection() == 1);
}

TEST_CASE("Langlands duality") {
  for (const char* s : {"A1", "A2", "B2", "C2", "G2"}) {
    auto d = sc(s);
    CHECK(d.dual().dual().isomorphic(d));
    CHECK(d.dual().cartan() == d.cartan().transpose());
  }
  CHECK(sc("A1").dual().index_of_connection() == 1);
  CHECK(snf_index(sc("A1").dual()) == 1);
  CHECK(sc("B2").dual().isomorphic(build_root_datum("C2", Variant::Adjoint)));
  CHECK(sc("C2").dual().isomorphic(build_root_datum("B2", Variant::Adjoint)));
  // The dual of SL_n has the weight lattice of PGL_n.
  auto d = sc("A3").dual();
  auto pgl = build_root_datum("A3", Variant::Adjoint);
  CHECK(d.isomorphic(pgl));
  CHECK(d.lattice_basis() == pgl.lattice_basis());
  CHECK(d.in_lattice(d.positive_roots()[0].weight));
  CHECK_FALSE(d.in_lattice(Weight{1, 0, 0}));
}

TEST_CASE("unsupported types") {
  CHECK_THROWS_AS(CartanType::parse("F4"), UnsupportedError);
  CHECK_THROWS_AS(CartanType::parse("B3"), UnsupportedError);
  CHECK_THROWS_AS(CartanType::parse("A0"), UnsupportedError);
  CHECK_THROWS_AS(parse_variant("weird"), UnsupportedError);
  CHECK(CartanType::parse("A5").to_string() == "A5");
}
