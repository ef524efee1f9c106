#pragma once

#include <optional>

#include "posetform/matrix.hpp"

namespace posetform {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// minimize objective . x
//   eq_lhs x  = eq_rhs
//   le_lhs x <= le_rhs
//   x_j >= lower[j] where given; variables without a bound are free.
struct LpProblem {
  RatVec objective;
  RatMat eq_lhs;
  RatVec eq_rhs;
  RatMat le_lhs;
  RatVec le_rhs;
  std::vector<std::optional<Rat>> lower;  // empty means all free
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<RatVec> point;
  std::optional<Rat> value;
};

// Exact two-phase simplex, Bland's rule throughout (the cone problems are
// heavily degenerate).
LpResult lp(const LpProblem& problem);

// Does x satisfy every constraint of the problem exactly?
bool lp_feasible_point(const LpProblem& problem, const RatVec& x);

}  // namespace posetform
