#include "doctest.h"

#include "lusztig/errors.hpp"
#include "lusztig/icstalk.hpp"

using namespace lusztig;

namespace {

FgAbelianGroup G(const char* s) { return FgAbelianGroup::parse(s); }

// Cohomology of the cochain complex of L(m;1) with one cell in each degree 0..3
// and differentials 0, m, 0: H^i = ker d_i / im d_{i-1}, via Smith forms.
GradedAbelianGroup lens_from_cochains(std::int64_t m) {
  const std::vector<std::int64_t> diff{0, m, 0};  // d_0, d_1, d_2
  GradedAbelianGroup h;
  for (int i = 0; i <= 3; ++i) {
    const std::int64_t out = i < 3 ? diff[i] : 0;
    const std::int64_t kernel_rank = out == 0 ? 1 : 0;
    if (kernel_rank == 0) continue;
    IntMatrix rel(1, 1, i > 0 ? diff[i - 1] : 0);
    const auto g = FgAbelianGroup::from_presentation(rel);
    if (!g.is_zero()) h[i] = g;
  }
  return h;
}

std::map<int, FgAbelianGroup> row(std::initializer_list<std::pair<const int, FgAbelianGroup>> entries) {
  return std::map<int, FgAbelianGroup>(entries);
}

}  // namespace

TEST_CASE("finitely generated abelian groups") {
  CHECK(FgAbelianGroup().to_string() == "0");
  CHECK(FgAbelianGroup::free(1).to_string() == "Z");
  CHECK(FgAbelianGroup::free(3).to_string() == "Z^3");
  CHECK(FgAbelianGroup(0, {2, 3}).to_string() == "Z/6");
  CHECK(FgAbelianGroup(1, {4, 2, 1}).to_string() == "Z + Z/2 + Z/4");
  CHECK(G("Z/2Z") == FgAbelianGroup::cyclic(2));
  CHECK(G("Z + Z/2 + Z/4") == FgAbelianGroup(1, {2, 4}));
  CHECK(G("0").is_zero());
  CHECK_THROWS_AS(G("Q"), PreconditionError);
  CHECK(FgAbelianGroup::from_presentation(IntMatrix{{2, 0}, {0, 0}}) == FgAbelianGroup(1, {2}));
  CHECK(FgAbelianGroup::from_presentation(IntMatrix{{4, 6}}) == FgAbelianGroup::cyclic(2));
  CHECK(FgAbelianGroup(0, {12, 2}).p_torsion_count(2) == 2);
  CHECK(FgAbelianGroup(0, {12, 2}).p_torsion_count(3) == 1);
  const nlohmann::json j = FgAbelianGroup(1, {2});
  CHECK(j.get<FgAbelianGroup>() == FgAbelianGroup(1, {2}));
}

TEST_CASE("lens space presets match the cochain complex") {
  for (std::int64_t m = 1; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(link_preset("lens:" + std::to_string(m)) == lens_from_cochains(m));
  }
  CHECK(link_preset("rp3") == link_preset("lens:2"));
  CHECK(link_preset("s3") == link_preset("lens:1"));
  CHECK_THROWS_AS(link_preset("torus"), UnsupportedError);
  CHECK_THROWS_AS(link_preset("lens:0"), PreconditionError);
}

TEST_CASE("universal coefficients for RP3") {
  const auto rp3 = link_preset("rp3");
  CHECK(uct_field(rp3, 2) == std::map<int, std::int64_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  for (std::int64_t p : {0, 3, 5})
    CHECK(uct_field(rp3, p) == std::map<int, std::int64_t>{{0, 1}, {1, 0}, {2, 0}, {3, 1}});
  CHECK_THROWS_AS(uct_field(rp3, 4), PreconditionError);
  // Euler characteristic does not depend on the field.
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t p : {0, 2, 3, 5, 7}) {
      std::int64_t chi = 0;
      for (const auto& [i, d] : uct_field(link_preset("lens:" + std::to_string(m)), p)) chi += i % 2 ? -d : d;
      CHECK(chi == 0);
    }
}

TEST_CASE("stalks on the quadric cone") {
  const auto rp3 = link_preset("rp3");
  const auto k = FgAbelianGroup::free(1);

  const auto push = pushforward_stalks(rp3, 2, 2);
  CHECK(push.open == row({{-2, k}}));
  CHECK(push.point == row({{-2, k}, {-1, k}, {0, k}, {1, k}}));

  const auto ic2 = cone_ic_stalks_field(rp3, 2, 2);
  CHECK(ic2.point == row({{-2, k}, {-1, k}}));
  const auto ic3 = cone_ic_stalks_field(rp3, 2, 3);
  CHECK(ic3.point == row({{-2, k}}));

  const auto icz = cone_ic_integral(rp3, 2);
  CHECK(icz.point == row({{-2, FgAbelianGroup::free(1)}}));
  CHECK(icz.max_degree == 0);
  const auto plus = cone_ic_plus(rp3, 2);
  CHECK(plus.point == row({{-2, FgAbelianGroup::free(1)}, {0, FgAbelianGroup::cyclic(2)}}));

  CHECK(render(ic2) ==
        "       -2  -1  0  1\n"
        "X_reg  k   0   0  0\n"
        "{0}    k   k   0  0\n");
  CHECK(render(plus) ==
        "       -2  -1  0\n"
        "X_reg  Z   0   0\n"
        "{0}    Z   0   Z/2\n");
  CHECK(stalk_table_to_json(icz)["point"]["-2"]["free_rank"] == 1);
}

TEST_CASE("perversity constraints") {
  const auto rp3 = link_preset("rp3");
  for (std::int64_t p : {0, 2, 3}) {
    CHECK(perverse_constraint_check(cone_ic_stalks_field(rp3, 2, p), 2, SupportBound::StrictIc));
    CHECK(perverse_constraint_check(pushforward_stalks(rp3, 2, p), 2) == false);
  }
  CHECK(perverse_constraint_check(cone_ic_integral(rp3, 2), 2, SupportBound::StrictIc));
  CHECK(perverse_constraint_check(cone_ic_plus(rp3, 2), 2, SupportBound::Perverse));
  CHECK_FALSE(perverse_constraint_check(cone_ic_plus(rp3, 2), 2, SupportBound::StrictIc));
}

TEST_CASE("reduction mod p") {
  const auto rp3 = link_preset("rp3");
  CHECK_FALSE(mod_p_simple(rp3, 2, 2));
  for (std::int64_t p : {0, 3, 5, 7}) CHECK(mod_p_simple(rp3, 2, p));
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t p : {2, 3, 5, 7}) CHECK(mod_p_simple(link_preset("lens:" + std::to_string(m)), 2, p) == (m % p != 0));
  CHECK(mod_p_simple(link_preset("s3"), 2, 2));
  CHECK_THROWS_AS(cone_ic_integral(rp3, 1), PreconditionError);
}

TEST_CASE("intersection forms") {
  const IntMatrix m{{-2}};
  CHECK_FALSE(intersection_form_semisimple(m, 2));
  CHECK(intersection_form_semisimple(m, 3));
  CHECK(intersection_form_semisimple(m, 0));
  CHECK(intersection_form_semisimple(IntMatrix(), 2));
  CHECK_THROWS_AS(intersection_form_semisimple(IntMatrix(1, 2), 2), PreconditionError);
  // A2 resolution: the Cartan matrix up to sign, determinant 3.
  const IntMatrix a2{{-2, 1}, {1, -2}};
  CHECK(intersection_form_semisimple(a2, 2));
  CHECK_FALSE(intersection_form_semisimple(a2, 3));
  CHECK(cotangent_self_intersection(2) == -2);
}
