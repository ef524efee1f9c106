#pragma once

#include "posetform/cones.hpp"
#include "posetform/simplex_min.hpp"

namespace posetform {

struct BadRational : std::runtime_error {
  explicit BadRational(const std::string& w) : std::runtime_error(w) {}
};
struct ConsistencyAlarm : std::logic_error {
  explicit ConsistencyAlarm(const std::string& w) : std::logic_error(w) {}
};

enum class Shape { Chain, Wattle, RSet, Other };
enum class RepType { Finite, Tame, Wild };

const char* shape_name(Shape s);
const char* rep_type_name(RepType t);

struct WattleSpec {
  std::vector<int> orders;  // <n_1,...,n_t>
  int t = 0;
  int n = 0;
  Rat r;  // (n+1)/t - 1
};

WattleSpec make_wattle_spec(const std::vector<int>& orders);

// chain element offsets in the wattle() layout; base[i] is z_{i+1}^-
std::vector<int> wattle_base(const std::vector<int>& orders);

// Lemma 13 conditions 1)-3): common points share a value alpha > 0,
// x(z_i^-) + x(z_{i+1}^+) = alpha, chain sums share a value beta > 0.
bool wattle_conditions(const std::vector<int>& orders, const RatVec& x);

struct ZetaResult {
  WattleSpec spec;
  Poset poset;
  RatVec stationary;  // verified member of St
};

// The r-wattle zeta(r) with its stationary vector; chains sum to r,
// every partial is 1 + r, the total is t*r.
ZetaResult zeta_generate(const Rat& r);

struct Recognition {
  Shape shape = Shape::Other;
  std::optional<WattleSpec> wattle;  // present for Wattle / RSet
};

// Requires Gamma(P) connected. Wattle orders are read off the direction
// runs of the A_n path; r-sets match zeta's sequence up to reversal.
Recognition recognize(const Poset& p);

// list I (P = 4) and list II (P > 4, minimally) fixtures
std::vector<Poset> critical_list_I();
std::vector<Poset> critical_list_II();

// P(S) >= 4 and every single-element deletion has P <= 4; all_subsets
// re-checks every proper subset (n <= 10).
bool is_utmost(const Poset& p, int cap = 16, bool all_subsets = false);

// Finite iff P < 4, Tame iff P = 4, else Wild; cross-checked against
// critical-list containment (throws ConsistencyAlarm on disagreement).
RepType rep_type(const Poset& p, int cap = 16);

struct Classification {
  Shape shape = Shape::Other;
  std::optional<WattleSpec> wattle;
  std::optional<Rat> r;  // set when shape == RSet
  RepType rep = RepType::Wild;
  Rat p_value;
  bool in_list_I = false;
  bool in_list_II = false;
  bool utmost = false;
  bool antimonotonous = false;
  std::optional<ConeWitness> c_witness;  // when not antimonotonous
  bool p_faithful = false;
};

Classification classify(const Poset& p, int cap = 16);

}  // namespace posetform
