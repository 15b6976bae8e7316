#pragma once

// Stalks of IC sheaves on a cone X = cone(M) with strata X_reg and {0},
// computed from the cohomology of the link M by the Deligne construction and
// the universal coefficient theorem.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lusztig/matrix.hpp"

namespace lusztig {

class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  // Any list of torsion orders is accepted and brought to invariant-factor form.
  FgAbelianGroup(std::int64_t free_rank, const std::vector<std::int64_t>& torsion);

  static FgAbelianGroup zero() { return {}; }
  static FgAbelianGroup free(std::int64_t rank) { return {rank, {}}; }
  static FgAbelianGroup cyclic(std::int64_t order) { return {0, {order}}; }
  // Z^generators / (column span of relations).
  static FgAbelianGroup from_presentation(const IntMatrix& relations);
  // "0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/4"
  static FgAbelianGroup parse(const std::string& text);

  std::int64_t free_rank() const { return free_rank_; }
  // d_1 | d_2 | ..., each >= 2
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  FgAbelianGroup torsion_part() const { return {0, torsion_}; }
  // Number of invariant factors divisible by p; 0 when p == 0.
  std::int64_t p_torsion_count(std::int64_t p) const;

  std::string to_string() const;
  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::int64_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

// degree -> group, only nonzero groups stored
using GradedAbelianGroup = std::map<int, FgAbelianGroup>;

void to_json(nlohmann::json& j, const FgAbelianGroup& g);
void from_json(const nlohmann::json& j, FgAbelianGroup& g);
nlohmann::json graded_to_json(const GradedAbelianGroup& h);
// Accepts {"0": "Z", "2": {"free_rank": 0, "torsion": [2]}, ...}
GradedAbelianGroup graded_from_json(const nlohmann::json& j);

// "rp3", "s3", "s1", "lens:m"
GradedAbelianGroup link_preset(const std::string& name);

// dim H^i(-; k) for k of characteristic p (0 allowed), over the degree range of H
// and one below it.
std::map<int, std::int64_t> uct_field(const GradedAbelianGroup& h, std::int64_t p);

struct StalkTable {
  // nullopt: integral coefficients; otherwise a field of this characteristic,
  // with dimensions stored as free ranks.
  std::optional<std::int64_t> characteristic;
  int d = 0;
  int min_degree = 0;  // display range
  int max_degree = 0;
  std::map<int, FgAbelianGroup> open;
  std::map<int, FgAbelianGroup> point;
  std::string title;

  std::int64_t point_dimension(int degree) const;
  friend bool operator==(const StalkTable&, const StalkTable&) = default;
};

// Stalks of j_* k[d] (or j_* Z[d] when p is nullopt).
StalkTable pushforward_stalks(const GradedAbelianGroup& link, int d, std::optional<std::int64_t> p);
StalkTable cone_ic_stalks_field(const GradedAbelianGroup& link, int d, std::int64_t p);
StalkTable cone_ic_integral(const GradedAbelianGroup& link, int d);
StalkTable cone_ic_plus(const GradedAbelianGroup& link, int d);

// IC(X, Z) (x)^L k == IC(X, k) at the stalk level.
bool mod_p_simple(const GradedAbelianGroup& link, int d, std::int64_t p);

enum class SupportBound { Perverse, StrictIc };
bool perverse_constraint_check(const StalkTable& t, int d, SupportBound bound = SupportBound::Perverse);

// Non-degeneracy of the form mod p (over Q when p == 0).
bool intersection_form_semisimple(const IntMatrix& form, std::int64_t p);
std::int64_t cotangent_self_intersection(std::int64_t euler_characteristic);

// Rows are strata, columns degrees; entries "Z", "Z/2", "k", "k^2", "0".
std::string render(const StalkTable& t);
nlohmann::json stalk_table_to_json(const StalkTable& t);

}  // namespace lusztig
