#pragma once

#include "posetform/quadform.hpp"

namespace posetform {

struct NotConcave : std::runtime_error {
  NotConcave() : std::runtime_error("form is not 2-concave") {}
};
struct InvalidWitness : std::runtime_error {
  explicit InvalidWitness(const std::string& w) : std::runtime_error(w) {}
};
struct IsolatedPivot : std::runtime_error {
  IsolatedPivot() : std::runtime_error("pivot element is isolated") {}
};
struct WrongShape : std::runtime_error {
  explicit WrongShape(const std::string& w) : std::runtime_error(w) {}
};
struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& w) : std::runtime_error(w) {}
};

enum class ConeKind { Cminus, Cplus, ChatMinus, ChatPlus, St, StPlus };

const char* cone_kind_name(ConeKind k);

struct ConeWitness {
  RatVec vector;
  ConeKind cone = ConeKind::Cminus;
  RatVec gradient;
  Rat coordinate_sum;
};

// Re-derives gradient/sum and checks the cone's defining inequalities.
bool verify_witness(const QuadraticForm& f, const ConeWitness& w);

// Builds a witness and verifies it; throws InvalidWitness on failure.
ConeWitness make_witness(const QuadraticForm& f, RatVec v, ConeKind kind);

// C^-(f) witness, or nullopt iff f is antimonotonous. Tries the nullspace
// of A first, then LP feasibility with the gradient sum pinned to -1.
std::optional<ConeWitness> c_cone(const QuadraticForm& f);

// witness of C~ = { v in C : gradient != 0 }
std::optional<ConeWitness> c_tilde(const QuadraticForm& f);

// Chat^-(f) witness (Lemma 1 relaxation).
std::optional<ConeWitness> hat_cones(const QuadraticForm& f);

// Lemma 1 proof: fold a Chat witness into C(f).
ConeWitness hat_to_c(const QuadraticForm& f, const ConeWitness& w);

// St(f) witness; kind StPlus when the common partial is positive.
std::optional<ConeWitness> stationary_cone(const QuadraticForm& f);

struct Dichotomy {
  std::optional<ConeWitness> st;
  std::optional<ConeWitness> c;
};

// Proposition 2: |A| != 0 implies exactly one of St(f), C(f) nonempty;
// returns the constructive witness.
Dichotomy nonsingular_dichotomy(const QuadraticForm& f);

struct DynkinWitness {
  RatVec vector;       // integer entries
  int pivot = 0;       // 0-based
  Rat pivot_gradient;  // in [0, 2]
};

struct DynkinSearch {
  std::optional<DynkinWitness> witness;
  bool exhaustive = true;  // false: box-limited search, absence unproven
};

// Solve (dA)_j = 0 for j != m exactly; 1-dim solution spaces give an exact
// verdict, higher dimensions search integer boxes [-box, box].
DynkinSearch dynkin_vector(const QuadraticForm& f, int m, int box = 6);

// Explicit vectors for standard stars: extended types get the radical
// vector (gradient 0), E_n the modified vector with pivot gradient 1,
// D_n the (-2,1,1,0,...,0,2) vector with pivot gradient 2.
DynkinWitness closed_form_dynkin(const Poset& p);

// Lemma 3 proof: Dynkin vector to C(f) witness.
ConeWitness dynkin_to_c(const QuadraticForm& f, const DynkinWitness& dw);

// Lemma 9/10/11 witness constructions on an embedded subset.
// embedding follows the element order of family_V() / crown(k) / fence(a,b).
ConeWitness lemma9_witness(const Poset& p, const std::vector<int>& v_embedding);
ConeWitness lemma10_witness(const Poset& p, const std::vector<int>& crown_embedding);
ConeWitness lemma11_witness(const Poset& p, const std::vector<int>& fence_embedding);

}  // namespace posetform
