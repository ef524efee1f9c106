#pragma once

#include "posetform/cones.hpp"
#include "posetform/quadform.hpp"

namespace posetform {

struct BadRange : std::runtime_error {
  explicit BadRange(const std::string& w) : std::runtime_error(w) {}
};
struct NonpositiveInput : std::runtime_error {
  NonpositiveInput() : std::runtime_error("summand values must be positive") {}
};

struct SimplexMinimum {
  Rat value;                 // min of f over the standard simplex
  RatVec minimizer;
  std::vector<int> support;  // 0-based indices with positive coordinate
  bool interior = false;
  Rat p_value;               // 1/value when value > 0, else 0
};

// Exact minimum of a symmetric rational form over { x >= 0, sum x = 1 }.
// Positive definite forms use an active-set descent; otherwise every
// support face is enumerated (throws CapExceeded past cap variables).
SimplexMinimum minimize_on_simplex(const QuadraticForm& f, int cap = 16);

// P(S) = 1 / ||S||, summed over connected components.
Rat p_value(const Poset& p, int cap = 16);
SimplexMinimum minimum_of_poset(const Poset& p, int cap = 16);

struct FaithfulWitness {
  RatVec u;      // interior minimizer, in St, coordinates sum to 1
  Rat value;
  bool strictness_certified = false;  // spot-checked strict boundary gap
};

// For positive definite f_S with St nonempty: the unique minimizer lies
// interior and realizes the minimum strictly.
std::optional<FaithfulWitness> faithful_witness(const Poset& p);

// inf over [0,1] of a t^k + b (1-t)^k; exact at k = 2 (= ab/(a+b)).
Rat direct_sum_p(const Rat& a, const Rat& b);
double direct_sum_p_float(double a, double b, double k);  // k > 1, approximate

Rat rho(const Rat& r);     // 2r/(r+1), r >= 1
Rat P_of_r(const Rat& r);  // r = l/t lowest terms -> 2lt/(l+t)

}  // namespace posetform
