#include "lusztig/serialize.hpp"

#include "lusztig/errors.hpp"

namespace lusztig {

namespace {

using nlohmann::json;

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw PreconditionError("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = j[i][k].get<std::int64_t>();
  }
  return m;
}

template <class Tag>
LatticeVector<Tag> vector_from_json(const json& j, std::size_t rank) {
  const auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != rank) throw PreconditionError("vector has the wrong rank");
  return LatticeVector<Tag>::from_span(v);
}

MatrixSource source_from_string(const std::string& s) {
  if (s == to_string(MatrixSource::Lcf)) return MatrixSource::Lcf;
  if (s == to_string(MatrixSource::Steinberg)) return MatrixSource::Steinberg;
  throw PreconditionError("unknown matrix source '" + s + "'");
}

}  // namespace

void require_schema(const json& j, const std::string& schema) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != schema)
    throw PreconditionError("expected a JSON document with schema " + schema);
}

json root_datum_to_json(const RootDatum& d) {
  json roots = json::array();
  for (const auto& r : d.positive_roots())
    roots.push_back({{"weight", r.weight.to_vector()}, {"coroot", r.coroot.to_vector()}, {"simple", r.simple.to_vector()}});
  const std::string type = d.type().to_string();
  return {{"schema", kRootDatumSchema},
          {"series", type.substr(0, 1)},
          {"variant", to_string(d.variant())},
          {"rank", d.rank()},
          {"cartan", matrix_to_json(d.cartan())},
          {"positive_roots", roots}};
}

RootDatum root_datum_from_json(const json& j) {
  require_schema(j, kRootDatumSchema);
  const auto series = j.at("series").get<std::string>();
  const auto rank = j.at("rank").get<std::size_t>();
  RootDatum d = build_root_datum(series + std::to_string(rank), parse_variant(j.at("variant").get<std::string>()));
  if (j.contains("cartan") && matrix_from_json(j["cartan"]) != d.cartan())
    throw PreconditionError("Cartan matrix does not match " + d.label());
  return d;
}

json affine_element_to_json(const AffineWeylGroup& w, const AffineWeylElement& x) {
  return {{"schema", kAffineElementSchema},
          {"word", w.reduced_word(x)},
          {"finite_matrix", matrix_to_json(w.finite().element(x.finite).action)},
          {"translation", x.translation.to_vector()}};
}

AffineWeylElement affine_element_from_json(const AffineWeylGroup& w, const json& j) {
  require_schema(j, kAffineElementSchema);
  if (j.contains("word")) {
    const auto word = j["word"].get<Word>();
    for (int k : word)
      if (k < 0 || static_cast<std::size_t>(k) >= w.num_generators())
        throw PreconditionError("generator index out of range");
    return w.from_word(word);
  }
  const auto finite = w.finite().find(matrix_from_json(j.at("finite_matrix")));
  if (!finite) throw PreconditionError("finite_matrix is not an element of W_f");
  return {static_cast<std::uint32_t>(*finite), vector_from_json<RootCoordTag>(j.at("translation"), w.rank())};
}

json decomposition_to_json(const AffineWeylGroup& w, const DecompositionMatrix& m) {
  json labels = json::array();
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    labels.push_back({{"weight", m.labels[i].weight.to_vector()},
                      {"word", m.labels[i].word},
                      {"length", m.labels[i].length},
                      {"jantzen", static_cast<bool>(m.jantzen[i])}});
  return {{"schema", kDecompositionSchema},
          {"series", w.datum().type().to_string()},
          {"variant", to_string(w.datum().variant())},
          {"p", m.p},
          {"source", to_string(m.source)},
          {"inverted", m.inverted},
          {"labels", labels},
          {"rows", matrix_to_json(m.entries)}};
}

DecompositionMatrix decomposition_from_json(const AffineWeylGroup& w, const json& j) {
  require_schema(j, kDecompositionSchema);
  DecompositionMatrix m;
  m.p = j.at("p").get<std::int64_t>();
  m.source = source_from_string(j.at("source").get<std::string>());
  m.inverted = j.at("inverted").get<bool>();
  for (const auto& label : j.at("labels")) {
    OrbitEntry e;
    e.word = label.at("word").get<Word>();
    e.element = w.from_word(e.word);
    e.length = label.at("length").get<std::size_t>();
    e.weight = vector_from_json<WeightTag>(label.at("weight"), w.rank());
    if (w.length(e.element) != e.length || w.dot(e.element, Weight(w.rank()), m.p) != e.weight)
      throw PreconditionError("label " + to_label(e.weight) + " is inconsistent with its word");
    m.labels.push_back(std::move(e));
    m.jantzen.push_back(label.at("jantzen").get<bool>());
  }
  m.entries = matrix_from_json(j.at("rows"));
  if (m.entries.rows() != m.labels.size() || m.entries.cols() != m.labels.size())
    throw PreconditionError("matrix size does not match the labels");
  return m;
}

}  // namespace lusztig
