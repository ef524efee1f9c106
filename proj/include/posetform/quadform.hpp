#pragma once

#include "posetform/linalg.hpp"
#include "posetform/poset.hpp"

namespace posetform {

struct ParallelPaths : std::runtime_error {
  ParallelPaths() : std::runtime_error("Hasse quiver has parallel paths") {}
};

// f(x) = x A x^T with A symmetric.
struct QuadraticForm {
  int n = 0;
  RatMat A;
};

// a_ii = 1, a_ij = 1/2 at comparable pairs.
QuadraticForm form_of_poset(const Poset& p);

Rat evaluate(const QuadraticForm& f, const RatVec& x);
RatVec gradient(const QuadraticForm& f, const RatVec& x);  // 2 x A

// a_ii in N, 2 a_ij in N_0
bool is_2concave(const QuadraticForm& f);

enum class DefinitenessKind {
  PositiveDefinite,
  PositiveSemidefiniteDegenerate,
  Indefinite,
};

struct Definiteness {
  DefinitenessKind kind = DefinitenessKind::PositiveDefinite;
  // Indefinite: v with f(v) < 0. Degenerate: v != 0 with v A = 0.
  std::optional<RatVec> certificate;
};

Definiteness definiteness(const QuadraticForm& f);

inline bool is_psd(const Definiteness& d) {
  return d.kind != DefinitenessKind::Indefinite;
}

struct QuiverMatrices {
  RatMat Qtilde;   // arrow adjacency, nilpotent
  RatMat Qhat;     // E - Qtilde, det 1
  RatMat QhatInv;  // E + Qtilde + ... + Qtilde^{n-1}, path counts
  RatMat TitsA;    // (Qhat + Qhat^T) / 2
};

QuiverMatrices quiver_matrices(const Poset& p);

// Two distinct directed paths sharing origin and terminus.
bool has_parallel_paths(const QuiverMatrices& q);

// A(f_S) == (QhatInv + QhatInv^T) / 2; holds whenever the quiver has no
// parallel paths.
bool matrix_identity_check(const Poset& p);

// Tits form of Gamma(S).
QuadraticForm tits_form(const Poset& p);

// Unimodular T with T TitsA T^T = A(f_S); requires no parallel paths.
RatMat z_equivalence(const Poset& p);

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);

// Example 4 reconstruction: a_i < b_j for all pairs except a_2, b_2.
Poset example4_fixture();

}  // namespace posetform
