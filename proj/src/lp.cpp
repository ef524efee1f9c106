#include "posetform/lp.hpp"

#include <cassert>

namespace posetform {

namespace {

// Standard form min c x, A x = b, x >= 0, tableau kept as B^{-1}[A|b].
struct Tableau {
  RatMat t;                   // m x (n+1), last column is rhs
  std::vector<std::size_t> basis;

  std::size_t m() const { return t.rows(); }
  std::size_t n() const { return t.cols() - 1; }

  void pivot(std::size_t row, std::size_t col) {
    Rat inv = 1 / t(row, col);
    for (std::size_t j = 0; j <= n(); ++j) t(row, j) *= inv;
    for (std::size_t i = 0; i < m(); ++i) {
      if (i == row || t(i, col) == 0) continue;
      Rat f = t(i, col);
      for (std::size_t j = 0; j <= n(); ++j) t(i, j) -= f * t(row, j);
    }
    basis[row] = col;
  }

  // Bland: entering = least index with negative reduced cost,
  // leaving = min ratio, ties by least basic index.
  // allowed(j) limits entering columns. Returns Optimal or Unbounded.
  template <class Allowed>
  LpStatus run(const RatVec& cost, Allowed allowed) {
    for (;;) {
      std::size_t enter = n();
      for (std::size_t j = 0; j < n() && enter == n(); ++j) {
        if (!allowed(j)) continue;
        Rat r = cost[j];
        for (std::size_t i = 0; i < m(); ++i)
          if (t(i, j) != 0) r -= cost[basis[i]] * t(i, j);
        if (r < 0) enter = j;
      }
      if (enter == n()) return LpStatus::Optimal;

      std::size_t leave = m();
      Rat best;
      for (std::size_t i = 0; i < m(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rat ratio = t(i, n()) / t(i, enter);
        if (leave == m() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m()) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  RatVec solution(std::size_t nvars) const {
    RatVec x(nvars);
    for (std::size_t i = 0; i < m(); ++i)
      if (basis[i] < nvars) x[basis[i]] = t(i, n());
    return x;
  }
};

struct StdResult {
  LpStatus status;
  RatVec x;
  Rat value;
};

StdResult solve_standard(const RatMat& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.rows(), n = a.cols();
  Tableau tab;
  tab.t = RatMat(m, n + m + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat sign = (b[i] < 0) ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = sign * a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = sign * b[i];
    tab.basis[i] = n + i;
  }

  RatVec phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  tab.run(phase1, [](std::size_t) { return true; });

  Rat w = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) w += tab.t(i, n + m);
  if (w != 0) return {LpStatus::Infeasible, {}, {}};

  // Drive leftover artificials out; redundant rows are neutralized.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j)
      if (tab.t(i, j) != 0) col = j;
    if (col < n) tab.pivot(i, col);
    else
      for (std::size_t j = 0; j <= n + m; ++j) tab.t(i, j) = 0;
  }

  RatVec phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  LpStatus st = tab.run(phase2, [n](std::size_t j) { return j < n; });
  RatVec x = tab.solution(n);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, x, {}};
  return {LpStatus::Optimal, x, dot(c, x)};
}

}  // namespace

LpResult lp(const LpProblem& p) {
  const std::size_t n = p.objective.size();
  std::vector<std::optional<Rat>> lower = p.lower;
  lower.resize(n);

  // Shift bounded variables to y >= 0, split free ones into y+ - y-.
  std::vector<std::size_t> pos(n), neg(n, SIZE_MAX);
  std::size_t nv = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = nv++;
    if (!lower[j]) neg[j] = nv++;
  }

  const std::size_t me = p.eq_lhs.rows(), mi = p.le_lhs.rows();
  const std::size_t ns = nv + mi;  // slacks for <= rows
  RatMat a(me + mi, ns);
  RatVec b(me + mi);
  auto fill_row = [&](std::size_t r, const RatMat& src, std::size_t sr,
                      const Rat& rhs) {
    Rat shift = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& cf = src(sr, j);
      if (cf == 0) continue;
      a(r, pos[j]) = cf;
      if (neg[j] != SIZE_MAX) a(r, neg[j]) = -cf;
      else shift += cf * *lower[j];
    }
    b[r] = rhs - shift;
  };
  for (std::size_t i = 0; i < me; ++i) fill_row(i, p.eq_lhs, i, p.eq_rhs[i]);
  for (std::size_t i = 0; i < mi; ++i) {
    fill_row(me + i, p.le_lhs, i, p.le_rhs[i]);
    a(me + i, nv + i) = 1;
  }

  RatVec c(ns);
  for (std::size_t j = 0; j < n; ++j) {
    c[pos[j]] = p.objective[j];
    if (neg[j] != SIZE_MAX) c[neg[j]] = -p.objective[j];
  }

  StdResult sr = solve_standard(a, b, c);
  LpResult res;
  res.status = sr.status;
  if (sr.status == LpStatus::Infeasible) return res;

  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = sr.x[pos[j]];
    if (neg[j] != SIZE_MAX) x[j] -= sr.x[neg[j]];
    else x[j] += *lower[j];
  }
  res.point = std::move(x);
  if (sr.status == LpStatus::Optimal) {
    res.value = dot(p.objective, *res.point);
    assert(lp_feasible_point(p, *res.point));
  }
  return res;
}

bool lp_feasible_point(const LpProblem& p, const RatVec& x) {
  if (x.size() != p.objective.size()) return false;
  for (std::size_t i = 0; i < p.eq_lhs.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += p.eq_lhs(i, j) * x[j];
    if (s != p.eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < p.le_lhs.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += p.le_lhs(i, j) * x[j];
    if (s > p.le_rhs[i]) return false;
  }
  for (std::size_t j = 0; j < p.lower.size() && j < x.size(); ++j)
    if (p.lower[j] && x[j] < *p.lower[j]) return false;
  return true;
}

}  // namespace posetform
