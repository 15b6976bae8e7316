#include "lusztig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lusztig/character.hpp"
#include "lusztig/errors.hpp"
#include "lusztig/hecke.hpp"
#include "lusztig/icstalk.hpp"
#include "lusztig/lcf.hpp"
#include "lusztig/serialize.hpp"

namespace lusztig::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string output;
  std::size_t max_terms = CharacterRing::kDefaultMaxTerms;

  std::string series;
  std::string variant = "sc";
  std::int64_t p = 0;
  std::optional<std::int64_t> p_opt;

  // lcf
  std::size_t max_len = 8;
  std::optional<std::int64_t> max_weight;
  bool jantzen_only = false;
  bool inverse = false;
  bool figure2 = false;
  std::string source = "auto";

  // kl
  bool dihedral = false;
  std::string x_word;
  std::optional<std::string> y_word;

  // char, sl2-check
  std::int64_t n = 0;
  std::int64_t upto = 0;

  // ic-cone
  std::string link;
  std::string link_json;
  int d = 2;
  std::string model = "all";

  // intersection-form
  std::string matrix;
  std::optional<std::int64_t> euler;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UnsupportedError("--format " + o.format + " is not available for this command");
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

// Left-aligned first column, right-aligned rest, two spaces between columns.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      const std::string pad(width[c] - r[c].size(), ' ');
      line += c == 0 ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string matrix_text(const IntMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{""};
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(std::to_string(m(i, j)));
    rows.push_back(r);
  }
  return text_table(rows);
}

std::string word_text(const Word& w) {
  if (w.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

RootDatum datum_from(const Options& o) { return build_root_datum(o.series, parse_variant(o.variant)); }

// ------------------------------------------------------------ root-datum

void cmd_root_datum(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const RootDatum d = datum_from(o);
  std::optional<Weight> rho;
  try {
    rho = d.rho();
  } catch (const PreconditionError&) {
  }
  if (o.format == "json") {
    json j = root_datum_to_json(d);
    j["rho"] = rho ? json(rho->to_vector()) : json(nullptr);
    j["coxeter_number"] = d.coxeter_number();
    j["index_of_connection"] = d.index_of_connection();
    out << j.dump(2) << '\n';
    return;
  }
  out << "root datum " << d.label() << '\n';
  out << "rank " << d.rank() << '\n';
  out << "Cartan matrix\n" << matrix_text(d.cartan());
  out << "positive roots (weight coordinates, simple-root coordinates)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : d.positive_roots()) rows.push_back({"", to_label(r.weight), to_label(r.simple)});
  out << text_table(rows);
  out << "rho " << (rho ? to_label(*rho) : std::string("not in the character lattice")) << '\n';
  out << "h = " << d.coxeter_number() << '\n';
  out << "kappa = " << d.index_of_connection() << '\n';
}

// ------------------------------------------------------------ lcf

MatrixSource resolve_source(const Options& o, const RootDatum& d) {
  if (o.source == "lcf") return MatrixSource::Lcf;
  if (o.source == "steinberg") {
    if (d.type() != CartanType{Series::A, 1}) throw UnsupportedError("--source steinberg is only available for A1");
    return MatrixSource::Steinberg;
  }
  return d.type() == CartanType{Series::A, 1} ? MatrixSource::Steinberg : MatrixSource::Lcf;
}

DecompositionMatrix restrict_to_jantzen(const DecompositionMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    if (m.jantzen[i]) keep.push_back(i);
  DecompositionMatrix r;
  r.p = m.p;
  r.source = m.source;
  r.inverted = m.inverted;
  r.entries = IntMatrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    r.labels.push_back(m.labels[keep[a]]);
    r.jantzen.push_back(true);
    for (std::size_t b = 0; b < keep.size(); ++b) r.entries(a, b) = m.entries(keep[a], keep[b]);
  }
  return r;
}

void cmd_lcf(Options o, std::ostream& out) {
  if (o.figure2) {
    o.series = "A1";
    o.variant = "sc";
    o.p = 5;
    o.max_weight = 30;
  }
  require_format(o, {"text", "csv", "json"});
  if (o.series.empty()) throw UnsupportedError("lcf needs a series or --figure2");
  LcfCalculator calc(datum_from(o), o.max_terms);
  const MatrixSource source = resolve_source(o, calc.group().datum());
  DecompositionMatrix m = o.max_weight ? calc.decomposition_matrix_bounded(o.p, *o.max_weight, source)
                                       : calc.decomposition_matrix(o.p, o.max_len, source);
  if (o.inverse) m = invert_decomposition(m);
  if (o.jantzen_only) m = restrict_to_jantzen(m);

  if (o.format == "json") {
    out << decomposition_to_json(calc.group(), m).dump(2) << '\n';
    return;
  }
  const std::string corner = m.inverted ? "nabla\\L" : "L\\nabla";
  const std::size_t n = m.labels.size();
  if (o.format == "csv") {
    std::vector<std::string> head{corner};
    for (const auto& l : m.labels) head.push_back(to_label(l.weight));
    head.push_back("jantzen");
    out << csv_line(head);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> row{to_label(m.labels[i].weight)};
      for (std::size_t j = 0; j < n; ++j) row.push_back(m.entries(i, j) ? std::to_string(m.entries(i, j)) : "");
      row.push_back(m.jantzen[i] ? "*" : "");
      out << csv_line(row);
    }
    return;
  }
  out << "decomposition matrix " << calc.group().datum().label() << ", p = " << m.p << ", source "
      << to_string(m.source) << '\n';
  out << (m.inverted ? "rows nabla_x, columns L_y: [nabla_x : L_y]" : "rows L_x, columns nabla_y: [L_x] in terms of [nabla_y]")
      << '\n';
  out << "* marks rows x satisfying the Jantzen condition\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", ""};
  for (const auto& l : m.labels) head.push_back(to_label(l.weight));
  rows.push_back(head);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row{m.jantzen[i] ? "*" : "", to_label(m.labels[i].weight)};
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.entries(i, j) ? std::to_string(m.entries(i, j)) : "");
    rows.push_back(row);
  }
  out << text_table(rows);
}

// ------------------------------------------------------------ kl

Word parse_word(const std::string& text, bool dihedral) {
  if (text.empty() || text == "id" || text == "e") return {};
  if (text[0] == 'w') {
    if (!dihedral) throw UnsupportedError("w_n notation needs --dihedral");
    const bool primed = text.size() > 1 && text[1] == '\'';
    const std::string digits = text.substr(primed ? 2 : 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw UnsupportedError("cannot parse word '" + text + "'");
    const int len = std::stoi(digits);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back((i + (primed ? 0 : 1)) % 2);
    return w;
  }
  Word w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw UnsupportedError("cannot parse word '" + text + "'");
    w.push_back(std::stoi(part));
  }
  return w;
}

AffineWeylElement element_from_word(const AffineWeylGroup& g, const Word& w) {
  for (int k : w)
    if (static_cast<std::size_t>(k) >= g.num_generators())
      throw PreconditionError("generator " + std::to_string(k) + " out of range 0.." + std::to_string(g.rank()));
  return g.from_word(w);
}

void cmd_kl(Options o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.dihedral) {
    o.series = "A1";
    o.variant = "sc";
  }
  if (o.series.empty()) throw UnsupportedError("kl needs --dihedral or --series");
  const AffineWeylGroup g(datum_from(o));
  const HeckeAlgebra H(g);
  const auto x = element_from_word(g, parse_word(o.x_word, o.dihedral));
  const Word xw = g.reduced_word(x);
  if (o.y_word) {
    const auto y = element_from_word(g, parse_word(*o.y_word, o.dihedral));
    const LaurentPolynomial poly = H.kl_polynomial(y, x);
    if (o.format == "json") {
      out << json{{"schema", "lusztig.kl_polynomial/1"}, {"series", g.datum().type().to_string()}, {"x", xw},
                  {"y", g.reduced_word(y)}, {"polynomial", poly}}
                 .dump(2)
          << '\n';
    } else {
      out << poly.to_string() << '\n';
    }
    return;
  }
  // Whole KL basis element, ordered by length then reduced word.
  std::vector<std::pair<std::pair<std::size_t, Word>, LaurentPolynomial>> terms;
  for (const auto& [y, poly] : H.kl_basis(x).terms()) terms.push_back({{g.length(y), g.reduced_word(y)}, poly});
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [key, poly] : terms) arr.push_back({{"y", key.second}, {"polynomial", poly}});
    out << json{{"schema", "lusztig.kl_basis/1"}, {"series", g.datum().type().to_string()}, {"x", xw}, {"terms", arr}}
               .dump(2)
        << '\n';
    return;
  }
  out << "b_x for x = " << word_text(xw) << ": coefficient of h_y\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, poly] : terms) rows.push_back({word_text(key.second), poly.to_string()});
  out << text_table(rows);
}

// ------------------------------------------------------------ char

void cmd_char(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  CharacterRing ring(build_root_datum("A1", Variant::SimplyConnected), o.max_terms);
  if (o.n < 0) throw PreconditionError("n must be nonnegative");
  const Weight lambda{o.n};
  const Character weyl = ring.weyl_character(lambda);
  std::optional<Character> simple;
  std::vector<std::int64_t> digits;
  if (o.p_opt) {
    simple = ring.sl2_simple_character(o.n, *o.p_opt);
    digits = p_adic_digits(o.n, *o.p_opt);
  }
  if (o.format == "json") {
    json j{{"schema", "lusztig.sl2_character/1"}, {"n", o.n}, {"weyl", character_to_json(weyl)},
           {"weyl_dimension", dimension(weyl)}};
    if (simple) {
      j["p"] = *o.p_opt;
      j["digits"] = digits;
      j["simple"] = character_to_json(*simple);
      j["simple_dimension"] = dimension(*simple);
      json expansion = json::array();
      for (const auto& [w, c] : ring.expand_in_standard_basis(*simple)) expansion.push_back({{"weight", w[0]}, {"mult", c}});
      j["simple_in_nabla_basis"] = expansion;
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "ch nabla(" << o.n << ") = " << render(weyl) << '\n';
  out << "dim nabla(" << o.n << ") = " << dimension(weyl) << '\n';
  if (simple) {
    out << "p = " << *o.p_opt << ", p-adic digits (least significant first):";
    for (auto dgt : digits) out << ' ' << dgt;
    out << '\n';
    out << "ch L(" << o.n << ") = " << render(*simple) << '\n';
    out << "dim L(" << o.n << ") = " << dimension(*simple) << '\n';
    out << "L(" << o.n << ") =";
    bool first = true;
    for (auto it = ring.expand_in_standard_basis(*simple); const auto& [w, c] : it) {
      out << (first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
      if (std::llabs(c) != 1) out << std::llabs(c) << '*';
      out << "nabla(" << w[0] << ')';
      first = false;
    }
    out << " in the Grothendieck group\n";
  }
}

// ------------------------------------------------------------ sl2-check

void cmd_sl2_check(const Options& o, std::ostream& out) {
  require_format(o, {"text", "csv", "json"});
  LcfCalculator calc(build_root_datum("A1", Variant::SimplyConnected), o.max_terms);
  const auto orbit = calc.group().dominant_orbit_bounded(o.p, o.upto);
  std::vector<OrbitEntry> sorted(orbit.begin(), orbit.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });

  struct Row {
    std::int64_t n;
    std::vector<std::int64_t> digits;
    bool valid;
  };
  std::vector<Row> rows;
  for (const auto& e : sorted) {
    const std::int64_t n = e.weight[0];
    auto digits = p_adic_digits(n, o.p);
    std::reverse(digits.begin(), digits.end());
    rows.push_back({n, digits, calc.sl2_lcf_valid(n, o.p)});
  }
  auto digit_text = [](const std::vector<std::int64_t>& ds) {
    std::string s;
    for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? " " : "") + std::to_string(ds[i]);
    return s;
  };
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"digits", r.digits}, {"at_most_two_digits", r.digits.size() <= 2}, {"lcf_valid", r.valid}});
    out << json{{"schema", "lusztig.sl2_check/1"}, {"p", o.p}, {"upto", o.upto}, {"rows", arr}}.dump(2) << '\n';
    return;
  }
  const auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  if (o.format == "csv") {
    out << csv_line({"n", "digits", "at_most_two_digits", "lcf_valid"});
    for (const auto& r : rows) out << csv_line({std::to_string(r.n), digit_text(r.digits), yes(r.digits.size() <= 2), yes(r.valid)});
    return;
  }
  out << "SL2 linkage class of 0, p = " << o.p << ", n <= " << o.upto << " (digits most significant first)\n";
  std::vector<std::vector<std::string>> table{{"n", "digits", "<= 2 digits", "lcf valid"}};
  for (const auto& r : rows) table.push_back({std::to_string(r.n), digit_text(r.digits), yes(r.digits.size() <= 2), yes(r.valid)});
  out << text_table(table);
}

// ------------------------------------------------------------ ic-cone

std::string read_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw PreconditionError("cannot read '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe_link(const GradedAbelianGroup& h) {
  std::string s;
  for (const auto& [deg, g] : h) s += (s.empty() ? "" : ", ") + ("H^" + std::to_string(deg) + " = " + g.to_string());
  return s.empty() ? "0" : s;
}

void cmd_ic_cone(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.link.empty() == o.link_json.empty()) throw UnsupportedError("give exactly one of --link and --link-json");
  const GradedAbelianGroup link =
      o.link.empty() ? graded_from_json(json::parse(read_text(o.link_json))) : link_preset(o.link);
  const std::string name = o.link.empty() ? "custom" : o.link;

  std::vector<StalkTable> tables;
  const bool all = o.model == "all";
  if (all || o.model == "jstar") tables.push_back(pushforward_stalks(link, o.d, o.p_opt));
  if (o.p_opt && (all || o.model == "ic")) tables.push_back(cone_ic_stalks_field(link, o.d, *o.p_opt));
  if (all || o.model == "integral") tables.push_back(cone_ic_integral(link, o.d));
  if (all || o.model == "plus") tables.push_back(cone_ic_plus(link, o.d));
  if (o.model == "ic" && !o.p_opt) throw UnsupportedError("--model ic needs --p");
  std::optional<bool> simple;
  if (o.p_opt) simple = mod_p_simple(link, o.d, *o.p_opt);

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& t : tables) arr.push_back(stalk_table_to_json(t));
    json j{{"schema", "lusztig.ic_cone/1"}, {"link", name}, {"cohomology", graded_to_json(link)}, {"d", o.d},
           {"p", o.p_opt ? json(*o.p_opt) : json(nullptr)}, {"tables", arr},
           {"mod_p_simple", simple ? json(*simple) : json(nullptr)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "cone over " << name << " (" << describe_link(link) << "), d = " << o.d << '\n';
  for (const auto& t : tables) {
    out << '\n' << t.title;
    if (t.characteristic) out << ", k of characteristic " << *t.characteristic;
    out << '\n' << render(t);
  }
  if (simple) out << "\nIC(X,Z) (x) k simple for characteristic " << *o.p_opt << ": " << (*simple ? "yes" : "no") << '\n';
}

// ------------------------------------------------------------ intersection-form

void cmd_intersection_form(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.matrix.empty() && !o.euler) throw UnsupportedError("give --matrix or --euler");
  json j{{"schema", "lusztig.intersection_form/1"}};
  if (!o.matrix.empty()) {
    if (!o.p_opt) throw UnsupportedError("--matrix needs --p");
    const auto rows = json::parse(o.matrix).get<std::vector<std::vector<std::int64_t>>>();
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw PreconditionError("matrix rows must have equal length");
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rows[i][k];
    }
    const bool ok = intersection_form_semisimple(m, *o.p_opt);
    j["matrix"] = rows;
    j["p"] = *o.p_opt;
    j["semisimple"] = ok;
    if (o.format == "text")
      out << "form " << json(rows).dump() << " mod " << *o.p_opt << ": " << (ok ? "non-degenerate" : "degenerate") << '\n';
  }
  if (o.euler) {
    const auto self = cotangent_self_intersection(*o.euler);
    j["euler_characteristic"] = *o.euler;
    j["self_intersection"] = self;
    if (o.format == "text") out << "zero section of T*M with chi(M) = " << *o.euler << ": self-intersection " << self << '\n';
  }
  if (o.format == "json") out << j.dump(2) << '\n';
}

// ------------------------------------------------------------ restricted-count

void cmd_restricted_count(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AffineWeylGroup g(datum_from(o));
  const std::int64_t count = g.count_p_restricted_in_orbit(o.p);
  const auto order = static_cast<std::int64_t>(g.finite().size());
  const std::int64_t kappa = g.datum().index_of_connection();
  if (o.format == "json") {
    out << json{{"schema", "lusztig.restricted_count/1"}, {"series", g.datum().type().to_string()},
                {"variant", to_string(g.datum().variant())}, {"p", o.p}, {"count", count},
                {"weyl_group_order", order}, {"index_of_connection", kappa}}
               .dump(2)
        << '\n';
    return;
  }
  out << g.datum().label() << ", p = " << o.p << ": " << count << " p-restricted weights in W .p 0\n";
  out << "|W_f| / kappa = " << order << " / " << kappa << " = " << order / kappa << '\n';
}

// ------------------------------------------------------------ dispatch

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output,-o", o.output, "write to this file instead of standard output");
  sub->add_option("--max-terms", o.max_terms, "cap on character terms")->capture_default_str();
}

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Lusztig character formula toolkit", "lusztig");
  app.require_subcommand(1);
  Options o;

  auto* rd = app.add_subcommand("root-datum", "Cartan matrix, positive roots, rho, h and kappa");
  rd->add_option("series", o.series, "A1..A8, B2, C2 or G2")->required();
  rd->add_option("variant", o.variant, "sc or adjoint")->capture_default_str();
  add_common(rd, o);

  auto* lcf = app.add_subcommand("lcf", "decomposition matrix of the principal block");
  lcf->add_option("series", o.series, "A1..A8, B2, C2 or G2");
  lcf->add_option("--variant", o.variant)->capture_default_str();
  lcf->add_option("--p", o.p, "characteristic, at least the Coxeter number");
  lcf->add_option("--max-len", o.max_len, "length bound on x")->capture_default_str();
  lcf->add_option("--max-weight", o.max_weight, "bound on every coordinate of x .p 0 (replaces --max-len)");
  lcf->add_flag("--jantzen-only", o.jantzen_only, "keep only the Jantzen region");
  lcf->add_flag("--inverse", o.inverse, "print [nabla_x : L_y] instead");
  lcf->add_flag("--figure2", o.figure2, "A1, p = 5, weights up to 30");
  lcf->add_option("--source", o.source, "auto, lcf or steinberg")
      ->check(CLI::IsMember({"auto", "lcf", "steinberg"}))
      ->capture_default_str();
  add_common(lcf, o);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials of an affine Weyl group");
  kl->add_flag("--dihedral", o.dihedral, "infinite dihedral group (affine A1)");
  kl->add_option("--series", o.series, "affine Weyl group of this type");
  kl->add_option("--variant", o.variant)->capture_default_str();
  kl->add_option("--x", o.x_word, "word: id, w3, w'3 or 0,1,0")->required();
  kl->add_option("--y", o.y_word, "word; omit to print all of b_x");
  add_common(kl, o);

  auto* ch = app.add_subcommand("char", "SL2 characters of nabla(n) and L(n)");
  ch->add_option("--n", o.n, "highest weight")->required();
  ch->add_option("--p", o.p_opt, "characteristic for L(n)");
  add_common(ch, o);

  auto* sl2 = app.add_subcommand("sl2-check", "where the character formula holds for SL2");
  sl2->add_option("--p", o.p)->required();
  sl2->add_option("--upto", o.upto, "largest weight")->required();
  add_common(sl2, o);

  auto* ic = app.add_subcommand("ic-cone", "IC stalks on the cone over a link");
  ic->add_option("--link", o.link, "rp3, s3, s1 or lens:m");
  ic->add_option("--link-json", o.link_json, "link cohomology as JSON text or a file path");
  ic->add_option("--d", o.d, "complex dimension of the cone")->capture_default_str();
  ic->add_option("--p", o.p_opt, "characteristic of k");
  ic->add_option("--model", o.model, "all, jstar, ic, integral or plus")
      ->check(CLI::IsMember({"all", "jstar", "ic", "integral", "plus"}))
      ->capture_default_str();
  add_common(ic, o);

  auto* form = app.add_subcommand("intersection-form", "semisimplicity of an intersection form mod p");
  form->add_option("--matrix", o.matrix, "JSON rows, for example [[-2]]");
  form->add_option("--p", o.p_opt, "characteristic (0 for Q)");
  form->add_option("--euler", o.euler, "Euler characteristic for the cotangent self-intersection");
  add_common(form, o);

  auto* rc = app.add_subcommand("restricted-count", "p-restricted weights in the linkage class of 0");
  rc->add_option("series", o.series)->required();
  rc->add_option("--variant", o.variant)->capture_default_str();
  rc->add_option("--p", o.p)->required();
  add_common(rc, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (lcf->parsed() && !o.figure2 && lcf->count("--p") == 0) throw CLI::RequiredError("--p");

  std::ostringstream buffer;
  if (rd->parsed()) cmd_root_datum(o, buffer);
  else if (lcf->parsed()) cmd_lcf(o, buffer);
  else if (kl->parsed()) cmd_kl(o, buffer);
  else if (ch->parsed()) cmd_char(o, buffer);
  else if (sl2->parsed()) cmd_sl2_check(o, buffer);
  else if (ic->parsed()) cmd_ic_cone(o, buffer);
  else if (form->parsed()) cmd_intersection_form(o, buffer);
  else if (rc->parsed()) cmd_restricted_count(o, buffer);

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw PreconditionError("cannot write '" + o.output + "'");
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(args, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace lusztig::cli
