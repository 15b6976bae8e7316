#include "doctest.h"

#include <random>

#include "lusztig/character.hpp"
#include "lusztig/errors.hpp"

using namespace lusztig;

namespace {

CharacterRing ring(const char* s) { return CharacterRing(build_root_datum(s, Variant::SimplyConnected)); }

// e^{-n} + e^{-n+2} + ... + e^{n}
Character a1_string(std::int64_t n) {
  Character ch;
  for (std::int64_t k = -n; k <= n; k += 2) ch[Weight{k}] = 1;
  return ch;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("Weyl characters in rank one") {
  auto r = ring("A1");
  CHECK(r.weyl_character(Weight{0}) == trivial_character(1));
  for (std::int64_t n = 0; n <= 40; ++n) {
    CHECK(r.weyl_character(Weight{n}) == a1_string(n));
    CHECK(dimension(r.weyl_character(Weight{n})) == n + 1);
  }
  CHECK_THROWS_AS(r.weyl_character(Weight{-1}), PreconditionError);
  CHECK(render(r.weyl_character(Weight{2})) == "e^{-2} + e^{0} + e^{2}");
}

TEST_CASE("Weyl characters against the dimension formula") {
  for (const char* s : {"A2", "B2", "C2", "G2"}) {
    CAPTURE(s);
    auto r = ring(s);
    for (std::int64_t a = 0; a <= 5; ++a)
      for (std::int64_t b = 0; b <= 5; ++b) {
        const Weight l{a, b};
        const Character ch = r.weyl_character(l);
        CHECK(dimension(ch) == r.weyl_dimension(l));
        CHECK(r.is_invariant(ch));
        CHECK(ch.at(l) == 1);
        // ch(Delta_l) = ch(nabla_{-w0 l})^* equals ch(nabla_l)
        Character dual;
        const Weight minus_w0 = -r.weyl_group().act(r.weyl_group().longest(), l);
        for (const auto& [w, m] : r.weyl_character(minus_w0)) dual[-w] = m;
        CHECK(dual == ch);
      }
  }
  auto a2 = ring("A2");
  CHECK(dimension(a2.weyl_character(Weight{1, 1})) == 8);
  auto a3 = ring("A3");
  CHECK(dimension(a3.weyl_character(Weight{1, 0, 1})) == 15);
}

TEST_CASE("tensor products") {
  auto r = ring("A1");
  const Character nat = r.weyl_character(Weight{1});
  CHECK(r.tensor(nat, trivial_character(1)) == nat);
  CHECK(r.tensor(nat, nat) == Character{{Weight{-2}, 1}, {Weight{0}, 2}, {Weight{2}, 1}});
  auto g2 = ring("G2");
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Character a = g2.weyl_character(Weight{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 2)});
    const Character b = g2.weyl_character(Weight{static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 3)});
    const Character c = g2.weyl_character(Weight{1, 0});
    CHECK(dimension(g2.tensor(a, b)) == dimension(a) * dimension(b));
    CHECK(g2.tensor(a, b) == g2.tensor(b, a));
    CHECK(g2.tensor(g2.tensor(a, b), c) == g2.tensor(a, g2.tensor(b, c)));
  }
}

TEST_CASE("Frobenius twist") {
  auto r = ring("A1");
  for (std::int64_t p : {2, 3, 5}) {
    CHECK(frobenius_twist(trivial_character(1), p) == trivial_character(1));
    CHECK(frobenius_twist(r.weyl_character(Weight{1}), p) == Character{{Weight{-p}, 1}, {Weight{p}, 1}});
    for (std::int64_t n = 0; n < 10; ++n) CHECK(dimension(frobenius_twist(r.weyl_character(Weight{n}), p)) == n + 1);
  }
}

TEST_CASE("Steinberg digits") {
  auto a1 = ring("A1");
  auto a2 = ring("A2");
  for (std::int64_t p : {2, 3, 5, 7}) {
    CHECK(a1.steinberg_digits(Weight{p - 1}, p) == std::vector<Weight>{Weight{p - 1}});
    if (p == 2) CHECK(a1.steinberg_digits(Weight{4}, p) == std::vector<Weight>{Weight{0}, Weight{0}, Weight{1}});
    if (p > 2) CHECK(a1.steinberg_digits(Weight{2 * p}, p) == std::vector<Weight>{Weight{0}, Weight{2}});
    if (p > 2)
      CHECK(a2.steinberg_digits(Weight{p + 1, p - 1}, p) == std::vector<Weight>{Weight{1, p - 1}, Weight{1, 0}});
    for (std::int64_t n = 0; n < 200; ++n) {
      std::int64_t back = 0, power = 1;
      for (const auto& d : a1.steinberg_digits(Weight{n}, p)) {
        CHECK(a1.datum().is_p_restricted(d, p));
        back += power * d[0];
        power *= p;
      }
      CHECK(back == n);
    }
  }
}

TEST_CASE("SL2 simple characters") {
  auto r = ring("A1");
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t n = 0; n < p; ++n) CHECK(r.sl2_simple_character(n, p) == r.weyl_character(Weight{n}));
    CHECK(r.sl2_simple_character(p, p) == Character{{Weight{-p}, 1}, {Weight{p}, 1}});
    CHECK(r.sl2_simple_character(p, p) != r.weyl_character(Weight{p}));
  }
  for (std::int64_t p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m) {
      const std::int64_t n = ipow(p, m) - 1;
      const Character st = r.sl2_simple_character(n, p);
      CHECK(st == a1_string(n));
      CHECK(dimension(st) == ipow(p, m));
    }
  CHECK_THROWS_AS(r.sl2_simple_character(3, 4), PreconditionError);
  CHECK_THROWS_AS(r.sl2_simple_character(-1, 5), PreconditionError);
  CHECK_THROWS_AS(ring("A2").sl2_simple_character(1, 5), UnsupportedError);
}

TEST_CASE("expansion in the standard basis") {
  auto r = ring("A1");
  for (std::int64_t n = 0; n < 12; ++n) {
    const auto e = r.expand_in_standard_basis(r.weyl_character(Weight{n}));
    CHECK(e == std::map<Weight, std::int64_t>{{Weight{n}, 1}});
  }
  CHECK(r.expand_in_standard_basis(r.sl2_simple_character(8, 5)) ==
        std::map<Weight, std::int64_t>{{Weight{0}, -1}, {Weight{8}, 1}});
  CHECK(r.expand_in_standard_basis(r.sl2_simple_character(18, 5)) ==
        std::map<Weight, std::int64_t>{{Weight{0}, -1}, {Weight{8}, 1}, {Weight{10}, -1}, {Weight{18}, 1}});
  CHECK_THROWS_AS(r.expand_in_standard_basis(Character{{Weight{1}, 1}}), PreconditionError);

  std::mt19937 rng(9);
  for (const char* s : {"A1", "A2", "B2", "G2"}) {
    auto cr = ring(s);
    for (int i = 0; i < 20; ++i) {
      std::map<Weight, std::int64_t> coeffs;
      for (int j = 0; j < 4; ++j) {
        Weight w(cr.datum().rank());
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = rng() % 4;
        const std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
        if (k != 0) coeffs[w] = k;
      }
      CHECK(cr.expand_in_standard_basis(cr.from_standard_basis(coeffs)) == coeffs);
    }
  }
}

TEST_CASE("character JSON round trip") {
  auto r = ring("A2");
  const Character ch = r.weyl_character(Weight{1, 1});
  CHECK(character_from_json(character_to_json(ch)) == ch);
  CHECK(character_to_json(trivial_character(2)).dump() == R"([{"mult":1,"weight":[0,0]}])");
}

TEST_CASE("term cap") {
  CharacterRing small(build_root_datum("A1", Variant::SimplyConnected), 10);
  CHECK_NOTHROW(small.weyl_character(Weight{9}));
  CHECK_THROWS_AS(small.weyl_character(Weight{10}), ResourceError);
}
