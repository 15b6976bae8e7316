#include "lusztig/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "lusztig/errors.hpp"

namespace lusztig {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
  LaurentPolynomial p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  return it != terms_.end() && it->first == exponent ? it->second : 0;
}

int LaurentPolynomial::min_degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial");
  return terms_.front().first;
}

int LaurentPolynomial::max_degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial");
  return terms_.back().first;
}

std::int64_t LaurentPolynomial::evaluate_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(-it->first, it->second);
  return out;
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& o, std::int64_t sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign * b->second);
      ++b;
    } else {
      const std::int64_t c = a->second + sign * b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  std::map<int, std::int64_t> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentPolynomial out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const std::int64_t mag = std::llabs(c);
    std::string power = e == 1 ? "v" : "v^" + std::to_string(e);
    if (e == 0) out += std::to_string(mag);
    else if (mag == 1) out += power;
    else out += std::to_string(mag) + "*" + power;
  }
  return out;
}

std::int64_t evaluate_at_one(const LaurentPolynomial& p) { return p.evaluate_at_one(); }

void to_json(nlohmann::json& j, const LaurentPolynomial& p) {
  j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
}

void from_json(const nlohmann::json& j, LaurentPolynomial& p) {
  if (!j.is_object()) throw PreconditionError("Laurent polynomial JSON must be an object");
  p = LaurentPolynomial();
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (key.empty() || used != key.size()) throw PreconditionError("bad exponent key '" + key + "'");
    p += LaurentPolynomial::monomial(value.get<std::int64_t>(), e);
  }
}

}  // namespace lusztig
