#include "posetform/simplex_min.hpp"

#include <algorithm>
#include <cmath>

#include "posetform/lp.hpp"

namespace posetform {

namespace {

// stationarity system on support T: 2(xA)_i = mu on T, sum x_T = 1
struct FaceSystem {
  RatMat m;  // (|T|+1) x (|T|+1), unknowns [x_T..., mu]
  RatVec b;
};

FaceSystem face_system(const QuadraticForm& f, const std::vector<int>& t) {
  const int k = static_cast<int>(t.size());
  FaceSystem s;
  s.m = RatMat(k + 1, k + 1);
  s.b = RatVec(k + 1, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s.m(i, j) = f.A(t[i], t[j]) * 2;
    s.m(i, k) = -1;
  }
  for (int j = 0; j < k; ++j) s.m(k, j) = 1;
  s.b[k] = 1;
  return s;
}

struct Candidate {
  RatVec x;  // full length
  Rat mu;
};

std::optional<Candidate> face_candidate(const QuadraticForm& f,
                                        const std::vector<int>& t) {
  const int k = static_cast<int>(t.size());
  FaceSystem sys = face_system(f, t);
  LinSolveResult sol = solve(sys.m, sys.b);
  if (!sol.particular) return std::nullopt;
  RatVec xt(k + 1);
  if (sol.nullspace.empty()) {
    xt = *sol.particular;
    for (int i = 0; i < k; ++i)
      if (xt[i] < 0) return std::nullopt;
  } else {
    // underdetermined: minimize mu subject to x_T >= 0
    LpProblem prob;
    prob.objective = RatVec(k + 1, Rat(0));
    prob.objective[k] = 1;
    prob.eq_lhs = sys.m;
    prob.eq_rhs = sys.b;
    prob.lower.assign(k + 1, Rat(0));
    prob.lower[k].reset();  // mu free
    LpResult res = lp(prob);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    xt = *res.point;
  }
  Candidate c;
  c.x = RatVec(f.n, Rat(0));
  for (int i = 0; i < k; ++i) c.x[t[i]] = xt[i];
  c.mu = xt[k];
  return c;
}

SimplexMinimum pack(const QuadraticForm& f, RatVec x) {
  SimplexMinimum out;
  out.minimizer = std::move(x);
  out.value = evaluate(f, out.minimizer);
  for (int i = 0; i < f.n; ++i)
    if (out.minimizer[i] > 0) out.support.push_back(i);
  out.interior = static_cast<int>(out.support.size()) == f.n;
  out.p_value = out.value > 0 ? Rat(1) / out.value : Rat(0);
  return out;
}

// active-set descent for positive definite forms (NNLS style); every face
// system is nonsingular, so each iteration has a unique stationary point.
std::optional<SimplexMinimum> minimize_pd(const QuadraticForm& f) {
  const int n = f.n;
  std::vector<bool> in(n, true);
  RatVec x(n, rat(1, n));
  for (int iter = 0; iter < 4 * n * n + 64; ++iter) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (in[i]) t.push_back(i);
    FaceSystem sys = face_system(f, t);
    LinSolveResult sol = solve(sys.m, sys.b);
    if (!sol.particular || !sol.nullspace.empty()) return std::nullopt;
    const RatVec& zt = *sol.particular;
    bool nonneg = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (zt[i] < 0) nonneg = false;
    if (nonneg) {
      RatVec z(n, Rat(0));
      for (std::size_t i = 0; i < t.size(); ++i) z[t[i]] = zt[i];
      Rat mu = zt[t.size()];
      RatVec g = gradient(f, z);
      int worst = -1;
      for (int j = 0; j < n; ++j)
        if (!in[j] && g[j] < mu && worst < 0) worst = j;
      if (worst < 0) {
        // KKT certificate: equal partials mu on the support, >= mu off it
        SimplexMinimum out = pack(f, std::move(z));
        if (out.value * 2 != mu)
          throw std::logic_error("stationary value mismatch");
        return out;
      }
      x = std::move(z);
      in[worst] = true;
      continue;
    }
    // step from x toward z until the first coordinate hits zero
    Rat alpha = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (zt[i] >= x[t[i]]) continue;
      Rat a = x[t[i]] / (x[t[i]] - zt[i]);
      alpha = std::min(alpha, a);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      x[t[i]] = x[t[i]] + alpha * (zt[i] - x[t[i]]);
      if (x[t[i]] == 0) in[t[i]] = false;
    }
  }
  return std::nullopt;  // fall back to face enumeration
}

}  // namespace

SimplexMinimum minimize_on_simplex(const QuadraticForm& f, int cap) {
  const int n = f.n;
  if (n < 1) throw BadParams("minimize_on_simplex: empty form");
  if (definiteness(f).kind == DefinitenessKind::PositiveDefinite) {
    if (auto fast = minimize_pd(f)) return *fast;
  }
  if (n > cap)
    throw CapExceeded("face enumeration needs n <= " + std::to_string(cap));
  std::optional<Candidate> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) t.push_back(i);
    auto c = face_candidate(f, t);
    if (c && (!best || c->mu < best->mu)) best = std::move(c);
  }
  if (!best) throw std::logic_error("no stationary face candidate");
  SimplexMinimum out = pack(f, std::move(best->x));
  if (out.value * 2 != best->mu)
    throw std::logic_error("stationary value mismatch");
  return out;
}

SimplexMinimum minimum_of_poset(const Poset& p, int cap) {
  auto comps = connected_components(p);
  if (comps.size() == 1)
    return minimize_on_simplex(form_of_poset(p), cap);
  // split mass across components: t_i proportional to P_i (Lemma 5)
  std::vector<SimplexMinimum> parts;
  Rat psum = 0;
  for (const auto& comp : comps) {
    parts.push_back(minimize_on_simplex(form_of_poset(induced_subposet(p, comp)), cap));
    if (!(parts.back().value > 0))
      throw std::logic_error("component minimum not positive");
    psum += parts.back().p_value;
  }
  RatVec x(p.n(), Rat(0));
  bool interior = true;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Rat t = parts[c].p_value / psum;
    for (std::size_t i = 0; i < comps[c].size(); ++i)
      x[comps[c][i]] = t * parts[c].minimizer[i];
    interior = interior && parts[c].interior;
  }
  SimplexMinimum out = pack(form_of_poset(p), std::move(x));
  if (out.value != Rat(1) / psum)
    throw std::logic_error("component split value mismatch");
  out.interior = interior;
  return out;
}

Rat p_value(const Poset& p, int cap) {
  Rat sum = 0;
  for (const auto& comp : connected_components(p)) {
    SimplexMinimum m =
        minimize_on_simplex(form_of_poset(induced_subposet(p, comp)), cap);
    if (!(m.value > 0)) throw std::logic_error("component minimum not positive");
    sum += m.p_value;
  }
  return sum;
}

std::optional<FaithfulWitness> faithful_witness(const Poset& p) {
  QuadraticForm f = form_of_poset(p);
  if (definiteness(f).kind != DefinitenessKind::PositiveDefinite)
    return std::nullopt;
  auto st = stationary_cone(f);
  if (!st) return std::nullopt;
  FaithfulWitness w;
  w.u = vec_scaled(st->vector, Rat(1) / st->coordinate_sum);
  w.value = evaluate(f, w.u);
  if (!(w.value > 0)) throw std::logic_error("faithful value not positive");
  // strictness spot check: vertices and edge midpoints of the simplex
  w.strictness_certified = true;
  const int n = f.n;
  for (int i = 0; i < n && w.strictness_certified; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    if (!(evaluate(f, e) > w.value)) w.strictness_certified = false;
    for (int j = i + 1; j < n && w.strictness_certified; ++j) {
      RatVec m(n, Rat(0));
      m[i] = m[j] = rat(1, 2);
      if (!(evaluate(f, m) > w.value)) w.strictness_certified = false;
    }
  }
  return w;
}

Rat direct_sum_p(const Rat& a, const Rat& b) {
  if (!(a > 0) || !(b > 0)) throw NonpositiveInput();
  return a * b / (a + b);
}

double direct_sum_p_float(double a, double b, double k) {
  if (a <= 0 || b <= 0) throw NonpositiveInput();
  if (k <= 1) throw BadRange("direct_sum_p_float: k > 1 required");
  double e = 1.0 / (k - 1.0);
  return a * b / std::pow(std::pow(a, e) + std::pow(b, e), k - 1.0);
}

Rat rho(const Rat& r) {
  if (r < 1) throw BadRange("rho: r >= 1 required");
  return 2 * r / (r + 1);
}

Rat P_of_r(const Rat& r) {
  if (r < 1) throw BadRange("P_of_r: r >= 1 required");
  Rat l(r.get_num()), t(r.get_den());
  return 2 * l * t / (l + t);
}

}  // namespace posetform
