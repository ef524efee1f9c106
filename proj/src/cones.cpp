#include "posetform/cones.hpp"

#include <algorithm>
#include <cstdlib>

#include "posetform/lp.hpp"

namespace posetform {

const char* cone_kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::Cminus: return "C-";
    case ConeKind::Cplus: return "C+";
    case ConeKind::ChatMinus: return "Chat-";
    case ConeKind::ChatPlus: return "Chat+";
    case ConeKind::St: return "St";
    case ConeKind::StPlus: return "St+";
  }
  return "?";
}

bool verify_witness(const QuadraticForm& f, const ConeWitness& w) {
  if (static_cast<int>(w.vector.size()) != f.n) return false;
  if (is_zero_vec(w.vector)) return false;
  RatVec g = gradient(f, w.vector);
  if (g != w.gradient) return false;
  if (vec_sum(w.vector) != w.coordinate_sum) return false;
  auto all_le0 = [&] {
    return std::all_of(g.begin(), g.end(), [](const Rat& x) { return x <= 0; });
  };
  auto all_ge0 = [&] {
    return std::all_of(g.begin(), g.end(), [](const Rat& x) { return x >= 0; });
  };
  switch (w.cone) {
    case ConeKind::Cminus:
      return w.coordinate_sum == 0 && all_le0();
    case ConeKind::Cplus:
      return w.coordinate_sum == 0 && all_ge0();
    case ConeKind::ChatMinus:
      return w.coordinate_sum >= 0 && all_le0();
    case ConeKind::ChatPlus:
      return w.coordinate_sum <= 0 && all_ge0();
    case ConeKind::St:
    case ConeKind::StPlus: {
      for (const auto& x : w.vector)
        if (!(x > 0)) return false;
      for (int i = 1; i < f.n; ++i)
        if (g[i] != g[0]) return false;
      if (w.cone == ConeKind::StPlus && !(g[0] > 0)) return false;
      return true;
    }
  }
  return false;
}

ConeWitness make_witness(const QuadraticForm& f, RatVec v, ConeKind kind) {
  ConeWitness w;
  w.vector = std::move(v);
  w.cone = kind;
  w.gradient = gradient(f, w.vector);
  w.coordinate_sum = vec_sum(w.vector);
  if (!verify_witness(f, w))
    throw InvalidWitness(std::string("constructed vector fails ") +
                         cone_kind_name(kind) + " membership");
  return w;
}

// nonzero nullspace vector of A with coordinate sum zero, if any
static std::optional<RatVec> null_vector_sum_zero(const QuadraticForm& f) {
  RatVec zero(f.n, Rat(0));
  auto ns = solve(f.A, zero).nullspace;  // A symmetric: vA = 0 <=> Av = 0
  if (ns.empty()) return std::nullopt;
  std::vector<Rat> sums(ns.size());
  for (std::size_t k = 0; k < ns.size(); ++k) sums[k] = vec_sum(ns[k]);
  for (std::size_t k = 0; k < ns.size(); ++k)
    if (sums[k] == 0) return ns[k];
  if (ns.size() >= 2)
    return vec_add(vec_scaled(ns[0], sums[1]), vec_scaled(ns[1], -sums[0]));
  return std::nullopt;
}

// LP feasibility for { v : sum v = 0 (or >= 0), grad <= 0, sum grad = -1 }
static std::optional<RatVec> gradient_negative_lp(const QuadraticForm& f,
                                                  bool relax_sum) {
  const int n = f.n;
  LpProblem prob;
  prob.objective = RatVec(n, Rat(0));
  // grad row i: 2 A column i (A symmetric: row i)
  RatMat grads(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grads(i, j) = f.A(i, j) * 2;
  RatVec grad_sum(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grad_sum[j] += grads(i, j);

  prob.eq_lhs = RatMat(relax_sum ? 1 : 2, n);
  for (int j = 0; j < n; ++j) prob.eq_lhs(0, j) = grad_sum[j];
  prob.eq_rhs = {Rat(-1)};
  if (!relax_sum) {
    for (int j = 0; j < n; ++j) prob.eq_lhs(1, j) = 1;
    prob.eq_rhs.push_back(0);
  }
  prob.le_lhs = RatMat(relax_sum ? n + 1 : n, n);
  prob.le_rhs = RatVec(relax_sum ? n + 1 : n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prob.le_lhs(i, j) = grads(i, j);
  if (relax_sum)  // -sum v <= 0
    for (int j = 0; j < n; ++j) prob.le_lhs(n, j) = -1;

  LpResult res = lp(prob);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.point;
}

std::optional<ConeWitness> c_cone(const QuadraticForm& f) {
  if (auto v = null_vector_sum_zero(f))
    return make_witness(f, *v, ConeKind::Cminus);
  if (auto v = gradient_negative_lp(f, false))
    return make_witness(f, *v, ConeKind::Cminus);
  return std::nullopt;
}

std::optional<ConeWitness> c_tilde(const QuadraticForm& f) {
  if (auto v = gradient_negative_lp(f, false))
    return make_witness(f, *v, ConeKind::Cminus);
  return std::nullopt;
}

std::optional<ConeWitness> hat_cones(const QuadraticForm& f) {
  RatVec zero(f.n, Rat(0));
  auto ns = solve(f.A, zero).nullspace;
  if (!ns.empty()) {
    RatVec v = ns[0];
    if (vec_sum(v) < 0) v = vec_neg(v);
    return make_witness(f, v, ConeKind::ChatMinus);
  }
  if (auto v = gradient_negative_lp(f, true))
    return make_witness(f, *v, ConeKind::ChatMinus);
  return std::nullopt;
}

ConeWitness hat_to_c(const QuadraticForm& f, const ConeWitness& w) {
  if (!is_2concave(f)) throw NotConcave();
  RatVec x = w.vector;
  if (w.cone == ConeKind::ChatPlus) x = vec_neg(x);
  else if (w.cone != ConeKind::ChatMinus)
    throw InvalidWitness("hat_to_c expects a Chat witness");
  {
    ConeWitness chk = w;
    chk.vector = x;
    chk.cone = ConeKind::ChatMinus;
    chk.gradient = gradient(f, x);
    chk.coordinate_sum = vec_sum(x);
    if (!verify_witness(f, chk))
      throw InvalidWitness("input is not a valid Chat witness");
  }
  Rat d = vec_sum(x);
  if (d == 0) return make_witness(f, x, ConeKind::Cminus);
  bool concentrated = x[0] == d;
  for (std::size_t i = 1; concentrated && i < x.size(); ++i)
    if (x[i] != 0) concentrated = false;
  if (concentrated) {
    RatVec u(f.n, Rat(0));
    u[0] = d;
    u[1] = -d;
    return make_witness(f, u, ConeKind::Cminus);
  }
  x[0] -= d;
  return make_witness(f, x, ConeKind::Cminus);
}

std::optional<ConeWitness> stationary_cone(const QuadraticForm& f) {
  const int n = f.n;
  if (n == 1) {
    ConeKind k = f.A(0, 0) > 0 ? ConeKind::StPlus : ConeKind::St;
    return make_witness(f, {Rat(1)}, k);
  }
  auto finish = [&](RatVec a) -> ConeWitness {
    Rat partial = gradient(f, a)[0];
    return make_witness(f, std::move(a),
                        partial > 0 ? ConeKind::StPlus : ConeKind::St);
  };
  Rat det = determinant(f.A);
  if (det != 0) {
    // a A = lambda e  =>  a = lambda y, y = e A^{-1}; need y of one strict sign
    RatMat inv = inverse(f.A);
    RatVec e(n, Rat(1));
    RatVec y = vec_mat(e, inv);
    bool pos = std::all_of(y.begin(), y.end(), [](const Rat& v) { return v > 0; });
    bool neg = std::all_of(y.begin(), y.end(), [](const Rat& v) { return v < 0; });
    if (!pos && !neg) return std::nullopt;
    return finish(pos ? y : vec_neg(y));
  }
  // singular case: LP with partials tied to the first one, coords >= 1
  LpProblem prob;
  prob.objective = RatVec(n, Rat(0));
  prob.eq_lhs = RatMat(n - 1, n);
  prob.eq_rhs = RatVec(n - 1, Rat(0));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j)
      prob.eq_lhs(i - 1, j) = (f.A(i, j) - f.A(0, j)) * 2;
  prob.lower.assign(n, Rat(1));
  LpResult res = lp(prob);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return finish(*res.point);
}

Dichotomy nonsingular_dichotomy(const QuadraticForm& f) {
  const int n = f.n;
  if (determinant(f.A) == 0) throw SingularMatrix();
  Dichotomy d;
  RatMat inv = inverse(f.A);
  RatVec e(n, Rat(1));
  RatVec y = vec_mat(e, inv);
  bool pos = std::all_of(y.begin(), y.end(), [](const Rat& v) { return v > 0; });
  bool neg = std::all_of(y.begin(), y.end(), [](const Rat& v) { return v < 0; });
  if (pos || neg) {
    RatVec a = pos ? y : vec_neg(y);
    Rat partial = gradient(f, a)[0];
    d.st = make_witness(f, std::move(a),
                        partial > 0 ? ConeKind::StPlus : ConeKind::St);
    return d;
  }
  // y has a zero or a sign change; w >= 0 with w . y = 0 gives v = -w A^{-1}
  RatVec w(n, Rat(0));
  int zero_at = -1, neg_at = -1, pos_at = -1;
  for (int i = 0; i < n; ++i) {
    if (y[i] == 0 && zero_at < 0) zero_at = i;
    if (y[i] < 0 && neg_at < 0) neg_at = i;
    if (y[i] > 0 && pos_at < 0) pos_at = i;
  }
  if (zero_at >= 0) {
    w[zero_at] = 1;
  } else {
    w[neg_at] = y[pos_at];
    w[pos_at] = -y[neg_at];
  }
  RatVec v = vec_neg(vec_mat(w, inv));
  // grad v = -2w <= 0, sum v = -w.(e A^{-1}) = -w.y = 0
  d.c = make_witness(f, std::move(v), ConeKind::Cminus);
  return d;
}

static std::optional<DynkinWitness> accept_dynkin(const QuadraticForm& f,
                                                  RatVec d, int m) {
  d = primitive_integer(d);
  if (is_zero_vec(d)) return std::nullopt;
  RatVec g = gradient(f, d);
  for (int j = 0; j < f.n; ++j)
    if (j != m && g[j] != 0) return std::nullopt;
  if (g[m] < 0) {
    d = vec_neg(d);
    g[m] = -g[m];
  }
  if (g[m] > 2) return std::nullopt;
  return DynkinWitness{std::move(d), m, g[m]};
}

DynkinSearch dynkin_vector(const QuadraticForm& f, int m, int box) {
  const int n = f.n;
  if (m < 0 || m >= n) throw IndexOutOfRange();
  // columns of A except m; d is a left null vector of that n x (n-1) block
  RatMat blk(n, n == 1 ? 0 : n - 1);
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = 0; j < n; ++j)
      if (j != m) blk(i, c++) = f.A(i, j);
  }
  std::vector<RatVec> basis = n == 1 ? std::vector<RatVec>{{Rat(1)}}
                                     : left_nullspace(blk);
  DynkinSearch out;
  if (basis.empty()) {  // cannot happen: n unknowns, n-1 equations
    out.exhaustive = true;
    return out;
  }
  if (basis.size() == 1) {
    out.exhaustive = true;
    out.witness = accept_dynkin(f, basis[0], m);
    return out;
  }
  out.exhaustive = false;
  const int k = static_cast<int>(basis.size());
  for (auto& b : basis) b = primitive_integer(b);
  std::vector<int> c(k, -box);
  // sweep coefficient boxes, smallest max-norm first
  for (int radius = 1; radius <= box && !out.witness; ++radius) {
    std::fill(c.begin(), c.end(), -radius);
    while (true) {
      int maxabs = 0;
      for (int v : c) maxabs = std::max(maxabs, std::abs(v));
      if (maxabs == radius) {
        RatVec d(n, Rat(0));
        for (int i = 0; i < k; ++i)
          if (c[i] != 0) d = vec_add(d, vec_scaled(basis[i], c[i]));
        if (!is_zero_vec(d)) {
          if (auto w = accept_dynkin(f, d, m)) {
            out.witness = std::move(w);
            break;
          }
        }
      }
      int pos = k - 1;
      while (pos >= 0 && c[pos] == radius) c[pos--] = -radius;
      if (pos < 0) break;
      ++c[pos];
    }
  }
  return out;
}

// Arm decomposition of a star-shaped Gamma: center + vertex lists root-out.
struct StarArms {
  int center = -1;
  std::vector<std::vector<int>> arms;  // excluding center, inner to outer
};

static std::optional<StarArms> star_arms(const Poset& p) {
  HasseGraph g = hasse(p).graph;
  auto deg = g.degree();
  auto adj = g.adjacency();
  StarArms s;
  for (int i = 0; i < g.n; ++i) {
    if (deg[i] >= 3) {
      if (s.center >= 0) return std::nullopt;
      s.center = i;
    }
  }
  if (s.center < 0) return std::nullopt;
  for (int nb : adj[s.center]) {
    std::vector<int> arm{nb};
    int prev = s.center, cur = nb;
    while (deg[cur] == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      arm.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    if (deg[cur] >= 3) return std::nullopt;  // ran into another branch point
    s.arms.push_back(std::move(arm));
  }
  return s;
}

DynkinWitness closed_form_dynkin(const Poset& p) {
  const int n = p.n();
  QuadraticForm f = form_of_poset(p);
  GammaClass gc = gamma_class(p);
  auto finish = [&](RatVec v, int pivot, const Rat& expect) {
    RatVec g = gradient(f, v);
    for (int j = 0; j < n; ++j)
      if (j != pivot ? g[j] != 0 : g[j] != expect)
        throw WrongShape("poset is not in standard orientation");
    return DynkinWitness{std::move(v), pivot, g[pivot]};
  };

  switch (gc.kind) {
    case GammaKind::ExtendedD:
    case GammaKind::ExtendedE6:
    case GammaKind::ExtendedE7:
    case GammaKind::ExtendedE8: {
      // radical vector: gradient vanishes everywhere
      RatVec zero(n, Rat(0));
      auto ns = solve(f.A, zero).nullspace;
      if (ns.size() != 1)
        throw WrongShape("extended type without 1-dim radical");
      RatVec d = primitive_integer(ns[0]);
      // sign: negative at the (a) branch point
      auto s = star_arms(p);
      int anchor = s ? s->center : 0;
      if (d[anchor] > 0) d = vec_neg(d);
      if (d[anchor] == 0) throw WrongShape("degenerate radical vector");
      return finish(std::move(d), 0, Rat(0));
    }
    case GammaKind::E6:
    case GammaKind::E7:
    case GammaKind::E8: {
      auto s = star_arms(p);
      if (!s || s->arms.size() != 3) throw WrongShape("not a 3-arm star");
      // pivot arm length and extended weights (m1, m2, m3) per type
      int pivot_len;
      Rat m3;
      std::vector<std::pair<int, Rat>> weight;  // arm length -> m_j
      if (gc.kind == GammaKind::E6) {
        pivot_len = 2; m3 = 3; weight = {{2, Rat(3)}, {3, Rat(3)}};
      } else if (gc.kind == GammaKind::E7) {
        pivot_len = 3; m3 = 4; weight = {{2, Rat(2)}, {3, Rat(4)}, {4, Rat(4)}};
      } else {
        pivot_len = 5; m3 = 6; weight = {{2, Rat(2)}, {3, Rat(3)}, {5, Rat(6)}};
      }
      RatVec v(n, Rat(0));
      v[s->center] = -m3;
      int pivot = -1;
      for (const auto& arm : s->arms) {
        // weights are keyed by chain order including the center vertex
        int len = static_cast<int>(arm.size()) + 1;
        Rat mj = 0;
        for (auto& [l, w] : weight)
          if (l == len) mj = w;
        if (mj == 0) throw WrongShape("unexpected arm length");
        for (int idx : arm) v[idx] = m3 / mj;
        if (len == pivot_len && pivot < 0) {
          pivot = arm.back();
          v[pivot] = 2;  // d_n = dtilde_n + dtilde_{n+1}
        }
      }
      if (pivot < 0) throw WrongShape("pivot arm not found");
      return finish(std::move(v), pivot, Rat(1));
    }
    case GammaKind::Dn: {
      auto s = star_arms(p);
      if (!s || s->arms.size() != 3) throw WrongShape("not a 3-arm star");
      RatVec v(n, Rat(0));
      v[s->center] = -2;
      int pivot = -1;
      int leaves = 0;
      for (const auto& arm : s->arms) {
        if (arm.size() == 1 && leaves < 2) {
          v[arm[0]] = 1;
          ++leaves;
        } else {
          pivot = arm.back();
          v[pivot] = 2;
        }
      }
      if (pivot < 0 || leaves != 2) throw WrongShape("not a D_n star");
      return finish(std::move(v), pivot, Rat(2));
    }
    default:
      throw WrongShape("no closed-form vector for this Gamma class");
  }
}

ConeWitness dynkin_to_c(const QuadraticForm& f, const DynkinWitness& dw) {
  const int n = f.n;
  const int m = dw.pivot;
  if (m < 0 || m >= n) throw IndexOutOfRange();
  bool isolated = true;
  for (int j = 0; j < n && isolated; ++j)
    if (j != m && f.A(m, j) != 0) isolated = false;
  if (isolated) throw IsolatedPivot();
  RatVec g = gradient(f, dw.vector);
  for (int j = 0; j < n; ++j)
    if (j != m && g[j] != 0)
      throw InvalidWitness("not a Dynkin vector for this pivot");
  if (g[m] < 0 || g[m] > 2)
    throw InvalidWitness("pivot gradient outside [0, 2]");
  Rat dbar = vec_sum(dw.vector);
  if (dbar <= 0) {
    // d lies in Chat+; negate into Chat- and fold (Lemma 1)
    ConeWitness hat = make_witness(f, vec_neg(dw.vector), ConeKind::ChatMinus);
    return hat_to_c(f, hat);
  }
  RatVec u = dw.vector;
  u[m] -= dbar;
  return make_witness(f, std::move(u), ConeKind::Cminus);
}

static void check_embedding(const Poset& p, const Poset& pattern,
                            const std::vector<int>& emb, const char* what) {
  if (static_cast<int>(emb.size()) != pattern.n())
    throw PreconditionFailed(std::string(what) + ": embedding size mismatch");
  for (int i : emb)
    if (i < 0 || i >= p.n()) throw IndexOutOfRange();
  for (int i = 0; i < pattern.n(); ++i)
    for (int j = 0; j < pattern.n(); ++j) {
      if (i == j) continue;
      if (pattern.less(i, j) != p.less(emb[i], emb[j]))
        throw PreconditionFailed(std::string(what) +
                                 ": embedding is not an induced copy");
    }
}

ConeWitness lemma9_witness(const Poset& p, const std::vector<int>& emb) {
  check_embedding(p, family_V(), emb, "lemma9");
  if (contains_induced(p, crown(2)))
    throw PreconditionFailed("lemma9: poset contains W^4");
  RatVec v(p.n(), Rat(0));
  v[emb[0]] = -1;  // h^-
  v[emb[1]] = 1;   // h_1
  v[emb[2]] = 1;   // h_2
  v[emb[3]] = -1;  // h^+
  return make_witness(form_of_poset(p), std::move(v), ConeKind::Cminus);
}

ConeWitness lemma10_witness(const Poset& p, const std::vector<int>& emb) {
  if (emb.size() < 4 || emb.size() % 2 != 0)
    throw PreconditionFailed("lemma10: even embedding of size >= 4 expected");
  const int k = static_cast<int>(emb.size()) / 2;
  check_embedding(p, crown(k), emb, "lemma10");
  QuadraticForm f = form_of_poset(p);
  if (!is_psd(definiteness(f)))
    throw PreconditionFailed("lemma10: form is not positive semidefinite");
  RatVec v(p.n(), Rat(0));
  for (int i = 0; i < k; ++i) {
    v[emb[i]] = -1;      // s_i^-
    v[emb[k + i]] = 1;   // s_i^+
  }
  return make_witness(f, std::move(v), ConeKind::Cminus);
}

ConeWitness lemma11_witness(const Poset& p, const std::vector<int>& emb) {
  if (emb.size() < 3 || emb.size() % 2 == 0)
    throw PreconditionFailed("lemma11: odd fence embedding expected");
  const int k = static_cast<int>(emb.size()) / 2;
  // W^{k,k+1} (k minus points) or its dual W^{k+1,k}
  bool dual = false;
  try {
    check_embedding(p, fence(k, k + 1), emb, "lemma11");
  } catch (const PreconditionFailed&) {
    check_embedding(p, fence(k + 1, k), emb, "lemma11");
    dual = true;
  }
  StructureReport rep = structure(p);
  if (gamma_class(p).kind != GammaKind::An && gamma_class(p).kind != GammaKind::Chain)
    throw PreconditionFailed("lemma11: Gamma(S) is not a path");
  RatVec v(p.n(), Rat(0));
  if (!dual) {
    // minus points get -2; inner plus points 2, the two outer plus points 1
    for (int i = 0; i < k; ++i) v[emb[i]] = -2;
    for (int i = 0; i <= k; ++i)
      v[emb[k + i]] = (i == 0 || i == k) ? 1 : 2;
    for (int idx : {emb[k], emb[2 * k]})
      if (std::find(rep.junction_points.begin(), rep.junction_points.end(),
                    idx) != rep.junction_points.end())
        throw PreconditionFailed("lemma11: outer plus point is a junction point");
  } else {
    // antiisomorphic reading: f is unchanged, the sign roles swap
    for (int i = 0; i <= k; ++i)
      v[emb[i]] = (i == 0 || i == k) ? 1 : 2;
    for (int i = 0; i < k; ++i) v[emb[k + 1 + i]] = -2;
    for (int idx : {emb[0], emb[k]})
      if (std::find(rep.junction_points.begin(), rep.junction_points.end(),
                    idx) != rep.junction_points.end())
        throw PreconditionFailed("lemma11: outer minus point is a junction point");
  }
  return make_witness(form_of_poset(p), std::move(v), ConeKind::Cminus);
}

}  // namespace posetform
