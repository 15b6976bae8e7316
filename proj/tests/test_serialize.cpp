#include "doctest.h"

#include "lusztig/errors.hpp"
#include "lusztig/serialize.hpp"

using namespace lusztig;

TEST_CASE("root datum JSON") {
  for (const char* s : {"A1", "A2", "A4", "B2", "C2", "G2"})
    for (Variant v : {Variant::SimplyConnected, Variant::Adjoint}) {
      CAPTURE(s);
      const RootDatum d = build_root_datum(s, v);
      const auto j = root_datum_to_json(d);
      CHECK(j["schema"] == kRootDatumSchema);
      CHECK(j["positive_roots"].size() == d.positive_roots().size());
      const RootDatum back = root_datum_from_json(nlohmann::json::parse(j.dump()));
      CHECK(back.isomorphic(d));
      CHECK(back.cartan() == d.cartan());
      CHECK(back.variant() == d.variant());
    }
  auto j = root_datum_to_json(build_root_datum("A2", Variant::SimplyConnected));
  j["cartan"][0][1] = -2;
  CHECK_THROWS_AS(root_datum_from_json(j), PreconditionError);
  j["schema"] = "something/1";
  CHECK_THROWS_AS(root_datum_from_json(j), PreconditionError);
}

TEST_CASE("affine element JSON") {
  const AffineWeylGroup w(build_root_datum("B2", Variant::SimplyConnected));
  const Word word{0, 1, 2, 0, 1, 0};
  const auto x = w.from_word(word);
  auto j = affine_element_to_json(w, x);
  CHECK(affine_element_from_json(w, j) == x);
  CHECK(j["word"].get<Word>() == w.reduced_word(x));
  j.erase("word");
  CHECK(affine_element_from_json(w, j) == x);
  j["finite_matrix"] = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(affine_element_from_json(w, j), PreconditionError);
  CHECK_THROWS_AS(affine_element_from_json(w, {{"schema", kAffineElementSchema}, {"word", {3}}}), PreconditionError);
}

TEST_CASE("decomposition matrix JSON") {
  LcfCalculator c(build_root_datum("A2", Variant::SimplyConnected));
  for (bool invert : {false, true}) {
    auto m = c.decomposition_matrix(5, 5);
    if (invert) m = invert_decomposition(m);
    const auto back = decomposition_from_json(c.group(), nlohmann::json::parse(decomposition_to_json(c.group(), m).dump()));
    CHECK(back.entries == m.entries);
    CHECK(back.jantzen == m.jantzen);
    CHECK(back.inverted == m.inverted);
    CHECK(back.p == m.p);
    REQUIRE(back.labels.size() == m.labels.size());
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
      CHECK(back.labels[i].element == m.labels[i].element);
      CHECK(back.labels[i].weight == m.labels[i].weight);
    }
  }
}
