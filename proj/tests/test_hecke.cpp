#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <thread>

#include "lusztig/errors.hpp"
#include "lusztig/hecke.hpp"

using namespace lusztig;

namespace {

using LP = LaurentPolynomial;

const LP v = LP::v();
const LP vi = LP::v_inverse();

LP vpow(int k) { return LP::monomial(1, k); }

AffineWeylGroup group(const char* s) { return AffineWeylGroup(build_root_datum(s, Variant::SimplyConnected)); }

// Alternating word of length n in the infinite dihedral group, starting with generator `first`.
AffineWeylElement alternating(const AffineWeylGroup& w, int n, int first) {
  Word word;
  for (int i = 0; i < n; ++i) word.push_back((first + i) % 2);
  return w.from_word(word);
}

std::vector<AffineWeylElement> elements_up_to(const AffineWeylGroup& w, std::size_t max_len) {
  std::vector<AffineWeylElement> out{w.identity()};
  std::vector<AffineWeylElement> frontier{w.identity()};
  std::set<AffineWeylElement> seen{w.identity()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : frontier)
      for (std::size_t k = 0; k < w.num_generators(); ++k) {
        auto y = w.multiply_generator_right(x, k);
        if (w.length(y) == len && seen.insert(y).second) next.push_back(y);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  CHECK((v + vi) * (v - vi) == vpow(2) - vpow(-2));
  CHECK((v * vi) == LP(1));
  CHECK((v - v).is_zero());
  CHECK((v + vi).bar() == v + vi);
  CHECK((LP(3) + v).coefficient(0) == 3);
  CHECK(evaluate_at_one(LP()) == 0);
  CHECK(evaluate_at_one(vpow(5)) == 1);
  CHECK(evaluate_at_one(v + vi) == 2);
  CHECK(LP().to_string() == "0");
  CHECK(vpow(2).to_string() == "v^2");
  CHECK((LP(1) + LP::monomial(2, 1) - vpow(3)).to_string() == "1 + 2*v - v^3");
  CHECK((-vi + v).to_string() == "-v^-1 + v");
  CHECK(LP(-4).to_string() == "-4");
}

TEST_CASE("Laurent polynomial JSON round trip") {
  const LP p = LP::monomial(-3, -2) + LP(7) + LP::monomial(1, 5);
  nlohmann::json j = p;
  CHECK(j.dump() == R"({"-2":-3,"0":7,"5":1})");
  CHECK(j.get<LP>() == p);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"x":1})").get<LP>(), PreconditionError);
}

TEST_CASE("quadratic relation and b_s") {
  auto w = group("A1");
  HeckeAlgebra H(w);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto s = w.generator(k);
    CHECK(H.multiply_by_generator(H.standard(w.identity()), k, Side::Right) == H.standard(s));
    HeckeElement expected = H.standard(w.identity());
    expected += (vi - v) * H.standard(s);
    CHECK(H.multiply_by_generator(H.standard(s), k, Side::Right) == expected);
    CHECK(H.multiply_by_generator(H.standard(s), k, Side::Left) == expected);
    const HeckeElement bs = H.kl_generator(k);
    CHECK(H.multiply_by_kl_generator(bs, k, Side::Right) == (v + vi) * bs);
    CHECK(H.kl_basis(s) == bs);
  }
  CHECK(H.kl_basis(w.identity()) == H.standard(w.identity()));
  CHECK(H.kl_polynomial(w.identity(), w.generator(1)) == v);
  // P_{s,1} = 0
  CHECK(H.kl_polynomial(w.generator(1), w.identity()).is_zero());
}

TEST_CASE("bar involution") {
  auto w = group("A2");
  HeckeAlgebra H(w);
  CHECK(H.bar(H.standard(w.identity())) == H.standard(w.identity()));
  for (std::size_t k = 0; k < 3; ++k) CHECK(H.bar(H.kl_generator(k)) == H.kl_generator(k));
  std::mt19937 rng(5);
  auto elems = elements_up_to(w, 5);
  for (int i = 0; i < 50; ++i) {
    HeckeElement h;
    for (int j = 0; j < 4; ++j)
      h.add(elems[rng() % elems.size()], LP::monomial(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 9) - 4));
    CHECK(H.bar(H.bar(h)) == h);
  }
}

TEST_CASE("infinite dihedral closed form") {
  auto w = group("A1");
  HeckeAlgebra H(w);
  for (int m = 1; m <= 12; ++m)
    for (int first : {0, 1}) {
      const auto x = alternating(w, m, first);
      HeckeElement expected = H.standard(x);
      for (int n = 1; n < m; ++n) {
        expected.add(alternating(w, n, 0), vpow(m - n));
        expected.add(alternating(w, n, 1), vpow(m - n));
      }
      expected.add(w.identity(), vpow(m));
      CHECK(H.kl_basis(x) == expected);
      for (int n = 1; n < m; ++n) CHECK(H.kl_polynomial(alternating(w, n, 1), x) == vpow(m - n));
    }
}

TEST_CASE("finite A3 has a non-monomial polynomial") {
  auto w = group("A3");
  HeckeAlgebra H(w);
  const Word word{2, 1, 3, 2};
  const auto x = w.from_word(word);
  CHECK(H.kl_polynomial(w.generator(2), x) == vpow(3) + v);
  CHECK(H.kl_polynomial(w.identity(), x) == vpow(4) + vpow(2));
  // Every P_{y, w0} is a monomial.
  const auto w0 = w.longest_finite();
  for (const auto& [y, p] : H.kl_basis(w0).terms()) CHECK(p == vpow(static_cast<int>(w.length(w0) - w.length(y))));
  CHECK(H.kl_basis(w0).terms().size() == 24);
}

TEST_CASE("KL basis properties") {
  for (const char* s : {"A1", "A2", "B2"}) {
    CAPTURE(s);
    auto w = group(s);
    HeckeAlgebra H(w);
    const std::size_t max_len = std::string(s) == "B2" ? 7 : 8;
    for (const auto& x : elements_up_to(w, max_len)) {
      const auto& b = H.kl_basis(x);
      CHECK(H.bar(b) == b);
      CHECK(b.coefficient(x) == LP(1));
      const auto lx = static_cast<int>(w.length(x));
      for (const auto& [y, p] : b.terms()) {
        if (y == x) continue;
        CHECK(w.bruhat_leq(y, x));
        const int ly = static_cast<int>(w.length(y));
        CHECK(p.min_degree() >= 1);
        CHECK(p.max_degree() <= lx - ly);
        for (const auto& [e, c] : p.terms()) {
          CHECK(c > 0);
          CHECK((e - (lx - ly)) % 2 == 0);
        }
        CHECK(H.kl_polynomial(w.inverse(y), w.inverse(x)) == p);
      }
    }
  }
}

TEST_CASE("concurrent cache use") {
  auto w = group("A2");
  HeckeAlgebra H(w);
  auto elems = elements_up_to(w, 7);
  std::vector<std::thread> threads;
  std::vector<std::map<AffineWeylElement, HeckeElement>> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& x = t % 2 ? elems[elems.size() - 1 - i] : elems[i];
        results[t][x] = H.kl_basis(x);
      }
    });
  for (auto& th : threads) th.join();
  HeckeAlgebra fresh(w);
  for (const auto& [x, b] : results[0]) {
    CHECK(b == fresh.kl_basis(x));
    for (int t = 1; t < 4; ++t) CHECK(results[t].at(x) == b);
  }
}
