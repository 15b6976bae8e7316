#include "lusztig/icstalk.hpp"

#include <algorithm>
#include <sstream>

#include "lusztig/errors.hpp"

namespace lusztig {

namespace {

void check_link(const GradedAbelianGroup& link, int d) {
  if (d < 1) throw PreconditionError("cone dimension d must be positive");
  for (const auto& [deg, g] : link)
    if (deg < 0 || deg > 2 * d - 1)
      throw PreconditionError("link cohomology in degree " + std::to_string(deg) + " outside [0, 2d-1]");
}

FgAbelianGroup group_at(const GradedAbelianGroup& h, int deg) {
  auto it = h.find(deg);
  return it == h.end() ? FgAbelianGroup() : it->second;
}

void put(std::map<int, FgAbelianGroup>& m, int deg, const FgAbelianGroup& g) {
  if (!g.is_zero()) m[deg] = g;
}

std::int64_t check_characteristic(std::int64_t p) {
  if (p != 0 && !is_prime(p)) throw PreconditionError("characteristic must be 0 or a prime");
  return p;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw PreconditionError("bad integer '" + s + "'");
  return v;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(std::int64_t free_rank, const std::vector<std::int64_t>& torsion)
    : free_rank_(free_rank) {
  if (free_rank < 0) throw PreconditionError("negative free rank");
  for (auto t : torsion)
    if (t < 1) throw PreconditionError("torsion orders must be positive");
  if (torsion.empty()) return;
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
  for (auto f : smith_normal_form(diag).invariant_factors)
    if (f > 1) torsion_.push_back(f);
}

FgAbelianGroup FgAbelianGroup::from_presentation(const IntMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  FgAbelianGroup g;
  g.free_rank_ = static_cast<std::int64_t>(relations.rows() - snf.rank);
  for (auto f : snf.invariant_factors)
    if (f > 1) g.torsion_.push_back(f);
  return g;
}

FgAbelianGroup FgAbelianGroup::parse(const std::string& text) {
  std::int64_t free = 0;
  std::vector<std::int64_t> torsion;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    part = trim(part);
    if (part == "0") continue;
    if (part == "Z") {
      ++free;
    } else if (part.rfind("Z^", 0) == 0) {
      free += parse_int(part.substr(2));
    } else if (part.rfind("Z/", 0) == 0) {
      std::string order = part.substr(2);
      if (order.size() > 1 && order.back() == 'Z') order.pop_back();  // "Z/2Z"
      torsion.push_back(parse_int(order));
    } else {
      throw PreconditionError("cannot parse abelian group '" + text + "'");
    }
  }
  return {free, torsion};
}

std::int64_t FgAbelianGroup::p_torsion_count(std::int64_t p) const {
  if (p == 0) return 0;
  return std::count_if(torsion_.begin(), torsion_.end(), [p](std::int64_t t) { return t % p == 0; });
}

std::string FgAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (auto t : torsion_) parts.push_back("Z/" + std::to_string(t));
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void to_json(nlohmann::json& j, const FgAbelianGroup& g) {
  j = {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}};
}

void from_json(const nlohmann::json& j, FgAbelianGroup& g) {
  if (j.is_string()) {
    g = FgAbelianGroup::parse(j.get<std::string>());
  } else if (j.is_object()) {
    g = FgAbelianGroup(j.value("free_rank", std::int64_t{0}), j.value("torsion", std::vector<std::int64_t>{}));
  } else {
    throw PreconditionError("abelian group JSON must be a string or an object");
  }
}

nlohmann::json graded_to_json(const GradedAbelianGroup& h) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [deg, g] : h) out[std::to_string(deg)] = g;
  return out;
}

GradedAbelianGroup graded_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PreconditionError("graded group JSON must be an object");
  GradedAbelianGroup out;
  for (const auto& [key, value] : j.items()) put(out, static_cast<int>(parse_int(key)), value.get<FgAbelianGroup>());
  return out;
}

GradedAbelianGroup link_preset(const std::string& name) {
  if (name == "rp3") return {{0, FgAbelianGroup::free(1)}, {2, FgAbelianGroup::cyclic(2)}, {3, FgAbelianGroup::free(1)}};
  if (name == "s3") return {{0, FgAbelianGroup::free(1)}, {3, FgAbelianGroup::free(1)}};
  if (name == "s1") return {{0, FgAbelianGroup::free(1)}, {1, FgAbelianGroup::free(1)}};
  if (name.rfind("lens:", 0) == 0) {
    const std::int64_t m = parse_int(name.substr(5));
    if (m < 1) throw PreconditionError("lens space order must be positive");
    GradedAbelianGroup h{{0, FgAbelianGroup::free(1)}, {3, FgAbelianGroup::free(1)}};
    put(h, 2, FgAbelianGroup::cyclic(m));
    return h;
  }
  throw UnsupportedError("unknown link preset '" + name + "' (expected rp3, s3, s1 or lens:m)");
}

std::map<int, std::int64_t> uct_field(const GradedAbelianGroup& h, std::int64_t p) {
  check_characteristic(p);
  std::map<int, std::int64_t> out;
  if (h.empty()) return out;
  const int lo = h.begin()->first - 1;
  const int hi = h.rbegin()->first;
  for (int i = lo; i <= hi; ++i) {
    const auto here = group_at(h, i), next = group_at(h, i + 1);
    out[i] = here.free_rank() + here.p_torsion_count(p) + next.p_torsion_count(p);
  }
  // The extra degree below is only kept when Tor makes it nonzero.
  if (out[lo] == 0) out.erase(lo);
  return out;
}

std::int64_t StalkTable::point_dimension(int degree) const {
  auto it = point.find(degree);
  return it == point.end() ? 0 : it->second.free_rank();
}

StalkTable pushforward_stalks(const GradedAbelianGroup& link, int d, std::optional<std::int64_t> p) {
  check_link(link, d);
  StalkTable t;
  t.characteristic = p;
  t.d = d;
  t.min_degree = -d;
  t.max_degree = d - 1;
  t.title = "j_*";
  t.open[-d] = FgAbelianGroup::free(1);
  if (p) {
    for (const auto& [deg, dim] : uct_field(link, *p))
      if (deg >= 0) put(t.point, deg - d, FgAbelianGroup::free(dim));
  } else {
    for (const auto& [deg, g] : link) put(t.point, deg - d, g);
  }
  return t;
}

StalkTable cone_ic_stalks_field(const GradedAbelianGroup& link, int d, std::int64_t p) {
  StalkTable t = pushforward_stalks(link, d, check_characteristic(p));
  std::erase_if(t.point, [](const auto& kv) { return kv.first >= 0; });
  t.title = "IC(X,k)";
  return t;
}

StalkTable cone_ic_integral(const GradedAbelianGroup& link, int d) {
  StalkTable t = pushforward_stalks(link, d, std::nullopt);
  std::erase_if(t.point, [](const auto& kv) { return kv.first >= 0; });
  t.max_degree = 0;
  t.title = "IC(X,Z)";
  return t;
}

StalkTable cone_ic_plus(const GradedAbelianGroup& link, int d) {
  StalkTable t = cone_ic_integral(link, d);
  put(t.point, 0, group_at(link, d).torsion_part());
  t.title = "IC+(X,Z)";
  return t;
}

bool mod_p_simple(const GradedAbelianGroup& link, int d, std::int64_t p) {
  const StalkTable field = cone_ic_stalks_field(link, d, p);
  const StalkTable integral = cone_ic_integral(link, d);
  // UCT applied to the truncated integral stalk complex.
  GradedAbelianGroup truncated(integral.point.begin(), integral.point.end());
  const auto reduced = uct_field(truncated, p);
  for (int i = -d; i <= 0; ++i) {
    auto it = reduced.find(i);
    const std::int64_t r = it == reduced.end() ? 0 : it->second;
    if (r != field.point_dimension(i)) return false;
  }
  return true;
}

bool perverse_constraint_check(const StalkTable& t, int d, SupportBound bound) {
  for (const auto& [deg, g] : t.open)
    if (!g.is_zero() && deg != -d) return false;
  const int top = bound == SupportBound::Perverse ? 0 : -1;
  for (const auto& [deg, g] : t.point)
    if (!g.is_zero() && (deg < -d || deg > top)) return false;
  return true;
}

bool intersection_form_semisimple(const IntMatrix& form, std::int64_t p) {
  if (!form.is_square()) throw PreconditionError("intersection form must be square");
  check_characteristic(p);
  if (form.rows() == 0) return true;
  return rank_mod(form, p) == form.rows();
}

std::int64_t cotangent_self_intersection(std::int64_t euler_characteristic) { return -euler_characteristic; }

namespace {

std::string cell(const StalkTable& t, const std::map<int, FgAbelianGroup>& row, int deg) {
  auto it = row.find(deg);
  if (it == row.end() || it->second.is_zero()) return "0";
  if (!t.characteristic) return it->second.to_string();
  const auto dim = it->second.free_rank();
  return dim == 1 ? "k" : "k^" + std::to_string(dim);
}

}  // namespace

std::string render(const StalkTable& t) {
  std::vector<std::vector<std::string>> rows{{""}, {"X_reg"}, {"{0}"}};
  for (int deg = t.min_degree; deg <= t.max_degree; ++deg) {
    rows[0].push_back(std::to_string(deg));
    rows[1].push_back(cell(t, t.open, deg));
    rows[2].push_back(cell(t, t.point, deg));
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c] + std::string(width[c] - r[c].size(), ' ');
      if (c + 1 < r.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

nlohmann::json stalk_table_to_json(const StalkTable& t) {
  nlohmann::json j;
  j["title"] = t.title;
  j["characteristic"] = t.characteristic ? nlohmann::json(*t.characteristic) : nlohmann::json(nullptr);
  j["d"] = t.d;
  j["degrees"] = {t.min_degree, t.max_degree};
  j["open"] = graded_to_json(GradedAbelianGroup(t.open.begin(), t.open.end()));
  j["point"] = graded_to_json(GradedAbelianGroup(t.point.begin(), t.point.end()));
  return j;
}

}  // namespace lusztig
