#pragma once

#include <optional>

#include "posetform/matrix.hpp"

namespace posetform {

struct NotSquare : std::runtime_error {
  NotSquare() : std::runtime_error("matrix is not square") {}
};

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct LinSolveResult {
  std::optional<RatVec> particular;  // absent when M x = b is inconsistent
  std::vector<RatVec> nullspace;     // basis of { v : M v = 0 }
};

// Exact elimination over Q. Solves M x = b (column-vector convention).
LinSolveResult solve(const RatMat& m, const RatVec& b);

// Basis of the left nullspace { v : v M = 0 }.
std::vector<RatVec> left_nullspace(const RatMat& m);

Rat determinant(const RatMat& m);

RatMat inverse(const RatMat& m);  // throws SingularMatrix

std::size_t rank(const RatMat& m);

}  // namespace posetform
