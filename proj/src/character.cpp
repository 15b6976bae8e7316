#include "lusztig/character.hpp"

#include <algorithm>
#include <sstream>

#include "lusztig/errors.hpp"

namespace lusztig {

void add_term(Character& ch, const Weight& w, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = ch.try_emplace(w, mult);
  if (inserted) return;
  it->second += mult;
  if (it->second == 0) ch.erase(it);
}

Character trivial_character(std::size_t rank) { return {{Weight(rank), 1}}; }

std::int64_t dimension(const Character& ch) {
  std::int64_t d = 0;
  for (const auto& [w, m] : ch) d += m;
  return d;
}

Character frobenius_twist(const Character& ch, std::int64_t p) {
  if (p < 1) throw PreconditionError("Frobenius twist needs p >= 1");
  Character out;
  for (const auto& [w, m] : ch) out.emplace(p * w, m);
  return out;
}

Character scale(const Character& ch, std::int64_t k) {
  Character out;
  if (k == 0) return out;
  for (const auto& [w, m] : ch) out.emplace(w, k * m);
  return out;
}

Character operator+(const Character& a, const Character& b) {
  Character out = a;
  for (const auto& [w, m] : b) add_term(out, w, m);
  return out;
}

Character operator-(const Character& a, const Character& b) {
  Character out = a;
  for (const auto& [w, m] : b) add_term(out, w, -m);
  return out;
}

std::string render(const Character& ch) {
  if (ch.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : ch) {
    if (first) os << (m < 0 ? "-" : "");
    else os << (m < 0 ? " - " : " + ");
    first = false;
    const std::int64_t mag = m < 0 ? -m : m;
    if (mag != 1) os << mag;
    os << "e^{" << to_label(w) << "}";
  }
  return os.str();
}

nlohmann::json character_to_json(const Character& ch) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, m] : ch) out.push_back({{"weight", w.to_vector()}, {"mult", m}});
  return out;
}

Character character_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("character JSON must be an array");
  Character out;
  for (const auto& term : j) {
    const auto coords = term.at("weight").get<std::vector<std::int64_t>>();
    add_term(out, Weight::from_span(coords), term.at("mult").get<std::int64_t>());
  }
  return out;
}

CharacterRing::CharacterRing(RootDatum datum, std::size_t max_terms)
    : datum_(std::move(datum)), finite_(datum_), max_terms_(max_terms), two_rho_vee_(datum_.rank()) {
  if (datum_.variant() != Variant::SimplyConnected)
    throw UnsupportedError("characters need a simply connected root datum");
  for (const Root& a : datum_.positive_roots()) two_rho_vee_ += a.coroot;
}

void CharacterRing::check_size(const Character& ch) const {
  if (ch.size() > max_terms_)
    throw ResourceError("character support exceeds " + std::to_string(max_terms_) + " terms");
}

std::int64_t CharacterRing::height(const Weight& w) const { return datum_.pairing(w, two_rho_vee_); }

bool CharacterRing::precedes(const Weight& a, const Weight& b) const {
  const auto ha = height(a), hb = height(b);
  return ha != hb ? ha < hb : a < b;
}

Weight CharacterRing::leading(const Character& ch) const {
  auto it = std::max_element(ch.begin(), ch.end(),
                             [this](const auto& a, const auto& b) { return precedes(a.first, b.first); });
  return it->first;
}

Character CharacterRing::weyl_character(const Weight& lambda) const {
  if (!datum_.is_dominant(lambda)) throw PreconditionError("Weyl character needs a dominant weight");
  const Weight rho = datum_.rho();
  Character numerator, denominator;
  for (std::size_t w = 0; w < finite_.size(); ++w) {
    const std::int64_t sign = finite_.length(w) % 2 ? -1 : 1;
    add_term(numerator, finite_.act(w, lambda + rho), sign);
    add_term(denominator, finite_.act(w, rho), sign);
  }
  // Long division by the denominator, whose leading term is e^rho.
  const std::int64_t floor = -height(lambda);
  Character quotient;
  Character remainder = numerator;
  while (!remainder.empty()) {
    const Weight top = leading(remainder);
    const Weight q = top - rho;
    if (height(q) < floor) throw InternalError("inexact division in the Weyl character formula");
    const std::int64_t c = remainder.at(top);
    add_term(quotient, q, c);
    for (const auto& [w, m] : denominator) add_term(remainder, q + w, -c * m);
    check_size(quotient);
  }
  return quotient;
}

std::int64_t CharacterRing::weyl_dimension(const Weight& lambda) const {
  if (!datum_.is_dominant(lambda)) throw PreconditionError("Weyl dimension needs a dominant weight");
  const Weight rho = datum_.rho_coordinates();
  __int128 num = 1, den = 1;
  for (const Root& a : datum_.positive_roots()) {
    num *= datum_.pairing(lambda + rho, a.coroot);
    den *= datum_.pairing(rho, a.coroot);
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula is not integral");
  return static_cast<std::int64_t>(num / den);
}

Character CharacterRing::tensor(const Character& a, const Character& b) const {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) add_term(out, wa + wb, ma * mb);
  check_size(out);
  return out;
}

bool CharacterRing::is_invariant(const Character& ch) const {
  for (std::size_t i = 0; i < datum_.rank(); ++i) {
    const Weight& alpha = datum_.simple_root(i).weight;
    for (const auto& [w, m] : ch) {
      auto it = ch.find(w - w[i] * alpha);
      if (it == ch.end() || it->second != m) return false;
    }
  }
  return true;
}

std::map<Weight, std::int64_t> CharacterRing::expand_in_standard_basis(const Character& ch) const {
  if (!is_invariant(ch)) throw PreconditionError("character is not W-invariant");
  std::map<Weight, std::int64_t> out;
  Character rest = ch;
  while (!rest.empty()) {
    const Weight top = leading(rest);
    if (!datum_.is_dominant(top)) throw InternalError("leading weight of an invariant character is not dominant");
    const std::int64_t c = rest.at(top);
    out[top] = c;
    rest = rest - scale(weyl_character(top), c);
  }
  return out;
}

Character CharacterRing::from_standard_basis(const std::map<Weight, std::int64_t>& coeffs) const {
  Character out;
  for (const auto& [w, c] : coeffs) out = out + scale(weyl_character(w), c);
  return out;
}

std::vector<Weight> CharacterRing::steinberg_digits(const Weight& lambda, std::int64_t p) const {
  if (p < 2) throw PreconditionError("Steinberg digits need p >= 2");
  if (!datum_.is_dominant(lambda)) throw PreconditionError("Steinberg digits need a dominant weight");
  std::vector<Weight> digits;
  Weight rest = lambda;
  do {
    Weight d(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      d[i] = rest[i] % p;
      rest[i] /= p;
    }
    digits.push_back(d);
  } while (!rest.is_zero());
  return digits;
}

Character CharacterRing::sl2_simple_character(std::int64_t n, std::int64_t p) const {
  if (!(datum_.type() == CartanType{Series::A, 1})) throw UnsupportedError("SL2 characters need the A1 datum");
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (n < 0) throw PreconditionError("n must be nonnegative");
  Character out = trivial_character(1);
  std::int64_t power = 1;
  for (const Weight& d : steinberg_digits(Weight{n}, p)) {
    out = tensor(out, frobenius_twist(weyl_character(d), power));
    power *= p;
  }
  return out;
}

}  // namespace lusztig
