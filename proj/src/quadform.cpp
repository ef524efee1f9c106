#include "posetform/quadform.hpp"

namespace posetform {

QuadraticForm form_of_poset(const Poset& p) {
  const int n = p.n();
  QuadraticForm f;
  f.n = n;
  f.A = RatMat(n, n);
  for (int i = 0; i < n; ++i) {
    f.A(i, i) = 1;
    for (int j = i + 1; j < n; ++j)
      if (p.comparable(i, j)) f.A(i, j) = f.A(j, i) = rat(1, 2);
  }
  return f;
}

Rat evaluate(const QuadraticForm& f, const RatVec& x) {
  if (static_cast<int>(x.size()) != f.n) throw DimensionMismatch();
  return dot(x, vec_mat(x, f.A));
}

RatVec gradient(const QuadraticForm& f, const RatVec& x) {
  if (static_cast<int>(x.size()) != f.n) throw DimensionMismatch();
  return vec_scaled(vec_mat(x, f.A), 2);
}

bool is_2concave(const QuadraticForm& f) {
  for (int i = 0; i < f.n; ++i) {
    const Rat& d = f.A(i, i);
    if (d.get_den() != 1 || d < 1) return false;
    for (int j = 0; j < f.n; ++j) {
      if (i == j) continue;
      Rat twice = f.A(i, j) * 2;
      if (twice.get_den() != 1 || twice < 0) return false;
    }
  }
  return true;
}

// Lagrange congruence diagonalization T A T^T = diag(d), certificates from
// rows of T.
Definiteness definiteness(const QuadraticForm& f) {
  const int n = f.n;
  RatMat a = f.A;
  RatMat t = RatMat::identity(n);

  auto add_row_col = [&](int dst, int src, const Rat& c) {
    for (int j = 0; j < n; ++j) a(dst, j) += c * a(src, j);
    for (int i = 0; i < n; ++i) a(i, dst) += c * a(i, src);
    for (int j = 0; j < n; ++j) t(dst, j) += c * t(src, j);
  };
  auto swap_rows = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (int k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (int k = 0; k < n; ++k) std::swap(t(i, k), t(j, k));
  };

  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int swap_with = -1, mix_with = -1;
      for (int j = k + 1; j < n; ++j) {
        if (a(j, j) != 0 && swap_with < 0) swap_with = j;
        if (a(k, j) != 0 && mix_with < 0) mix_with = j;
      }
      if (swap_with >= 0) swap_rows(k, swap_with);
      else if (mix_with >= 0) add_row_col(k, mix_with, 1);  // diag gains 2 a_kj
      else continue;  // zero row: d_k = 0
    }
    Rat piv = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_row_col(i, k, -a(i, k) / piv);
    }
  }

  Definiteness res;
  bool degenerate = false;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) < 0) {
      res.kind = DefinitenessKind::Indefinite;
      RatVec v(n);
      for (int j = 0; j < n; ++j) v[j] = t(k, j);
      res.certificate = std::move(v);
      return res;
    }
    if (a(k, k) == 0 && !degenerate) {
      degenerate = true;
      RatVec v(n);
      for (int j = 0; j < n; ++j) v[j] = t(k, j);
      res.certificate = std::move(v);
    }
  }
  res.kind = degenerate ? DefinitenessKind::PositiveSemidefiniteDegenerate
                        : DefinitenessKind::PositiveDefinite;
  if (!degenerate) res.certificate.reset();
  return res;
}

QuiverMatrices quiver_matrices(const Poset& p) {
  const int n = p.n();
  Hasse h = hasse(p);
  QuiverMatrices q;
  q.Qtilde = RatMat(n, n);
  for (auto [a, b] : h.quiver.arrows) q.Qtilde(a, b) = 1;
  q.Qhat = RatMat::identity(n) - q.Qtilde;
  q.QhatInv = RatMat::identity(n);
  RatMat power = RatMat::identity(n);
  for (int t = 1; t < n; ++t) {
    power = power * q.Qtilde;
    q.QhatInv = q.QhatInv + power;
  }
  q.TitsA = (q.Qhat + q.Qhat.transposed()).scaled(rat(1, 2));
  return q;
}

bool has_parallel_paths(const QuiverMatrices& q) {
  const std::size_t n = q.Qtilde.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && q.QhatInv(i, j) >= 2) return true;
  return false;
}

bool matrix_identity_check(const Poset& p) {
  QuiverMatrices q = quiver_matrices(p);
  RatMat sym = (q.QhatInv + q.QhatInv.transposed()).scaled(rat(1, 2));
  return sym == form_of_poset(p).A;
}

QuadraticForm tits_form(const Poset& p) {
  QuadraticForm f;
  f.n = p.n();
  f.A = quiver_matrices(p).TitsA;
  return f;
}

RatMat z_equivalence(const Poset& p) {
  QuiverMatrices q = quiver_matrices(p);
  if (has_parallel_paths(q)) throw ParallelPaths();
  const RatMat& t = q.QhatInv;
  RatMat check = t * q.TitsA * t.transposed();
  if (!(check == form_of_poset(p).A))
    throw std::logic_error("Z-equivalence identity failed");
  return t;
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm f;
  f.n = a.n + b.n;
  f.A = RatMat(f.n, f.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) f.A(i, j) = a.A(i, j);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) f.A(a.n + i, a.n + j) = b.A(i, j);
  return f;
}

Poset example4_fixture() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) continue;
      pairs.emplace_back(i, 3 + j);
    }
  Poset p = Poset::from_pairs0(6, pairs);
  p.set_labels({"a1", "a2", "a3", "b1", "b2", "b3"});
  return p;
}

}  // namespace posetform
