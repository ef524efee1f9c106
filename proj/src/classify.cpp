#include "posetform/classify.hpp"

#include <algorithm>

namespace posetform {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Chain: return "chain";
    case Shape::Wattle: return "wattle";
    case Shape::RSet: return "r-set";
    case Shape::Other: return "other";
  }
  return "?";
}

const char* rep_type_name(RepType t) {
  switch (t) {
    case RepType::Finite: return "finite";
    case RepType::Tame: return "tame";
    case RepType::Wild: return "wild";
  }
  return "?";
}

WattleSpec make_wattle_spec(const std::vector<int>& orders) {
  WattleSpec s;
  s.orders = orders;
  s.t = static_cast<int>(orders.size());
  s.n = 0;
  for (int ni : orders) s.n += ni;
  s.r = rat(s.n + 1, s.t) - 1;
  return s;
}

std::vector<int> wattle_base(const std::vector<int>& orders) {
  std::vector<int> base(orders.size());
  int n = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    base[i] = n;
    n += orders[i];
  }
  return base;
}

bool wattle_conditions(const std::vector<int>& orders, const RatVec& x) {
  const int t = static_cast<int>(orders.size());
  auto base = wattle_base(orders);
  const int n = base.back() + orders.back();
  if (static_cast<int>(x.size()) != n) return false;
  auto zminus = [&](int i) { return base[i]; };
  auto zplus = [&](int i) { return base[i] + orders[i] - 1; };
  // junction points: z_i^- for i < t-1, z_i^+ for i > 0
  std::vector<bool> junction(n, false);
  for (int i = 0; i + 1 < t; ++i) junction[zminus(i)] = true;
  for (int i = 1; i < t; ++i) junction[zplus(i)] = true;
  std::optional<Rat> alpha;
  for (int s = 0; s < n; ++s) {
    if (junction[s]) continue;
    if (!alpha) alpha = x[s];
    else if (x[s] != *alpha) return false;
  }
  if (!alpha || !(*alpha > 0)) return false;
  for (int i = 0; i + 1 < t; ++i)
    if (x[zminus(i)] + x[zplus(i + 1)] != *alpha) return false;
  std::optional<Rat> beta;
  for (int i = 0; i < t; ++i) {
    Rat sum = 0;
    for (int j = 0; j < orders[i]; ++j) sum += x[base[i] + j];
    if (!beta) beta = sum;
    else if (sum != *beta) return false;
  }
  return *beta > 0;
}

ZetaResult zeta_generate(const Rat& r) {
  if (r < 1) throw BadRational("zeta: r >= 1 required");
  mpz_class l = r.get_num(), t = r.get_den();
  if (!t.fits_sint_p() || !l.fits_sint_p()) throw BadRational("zeta: r too large");
  const int ti = static_cast<int>(t.get_si());
  const int li = static_cast<int>(l.get_si());
  ZetaResult out;
  if (ti == 1) {  // zeta(r) is the chain Z_r
    out.spec = make_wattle_spec({li});
    out.poset = chain(li);
    out.stationary = RatVec(li, Rat(1));
  } else {
    const int q = li % ti;
    const int fl = li / ti;  // [r]
    std::vector<int> orders(ti);
    orders[0] = orders[ti - 1] = fl + 1;
    auto floor_ir = [&](int i) { return mpz_class(mpz_class(l * i) / t); };
    for (int i = 2; i < ti; ++i) {
      mpz_class ni = floor_ir(i) - floor_ir(i - 1) + 1;
      orders[i - 1] = static_cast<int>(ni.get_si());
    }
    out.spec = make_wattle_spec(orders);
    out.poset = wattle(orders);
    // x = 1 off the junctions, x(z_i^-) = {ir}, x(z_i^+) = 1 - {(i-1)r}
    auto base = wattle_base(orders);
    out.stationary = RatVec(out.spec.n, Rat(1));
    for (int i = 1; i < ti; ++i) {
      Rat fr = frac_of(r * i);
      out.stationary[base[i - 1]] = fr;                       // z_i^-
      out.stationary[base[i] + orders[i] - 1] = 1 - fr;      // z_{i+1}^+
    }
    // structural checks: n = t([r]+1) + q - 1, q-1 chains of order [r]+2
    if (out.spec.n != ti * (fl + 1) + q - 1)
      throw std::logic_error("zeta: size formula violated");
    int wide = 0;
    for (int ni : orders) {
      if (ni == fl + 2) ++wide;
      else if (ni != fl + 1) throw std::logic_error("zeta: bad chain order");
    }
    if (wide != q - 1) throw std::logic_error("zeta: wide chain count");
    if (!wattle_conditions(orders, out.stationary))
      throw std::logic_error("zeta: stationary conditions violated");
  }
  // Eqs (4)-(6): chain sums r, partials 1 + r, total t*r
  QuadraticForm f = form_of_poset(out.poset);
  RatVec g = gradient(f, out.stationary);
  for (const Rat& gi : g)
    if (gi != 1 + r) throw std::logic_error("zeta: partials != 1 + r");
  auto base = wattle_base(out.spec.orders);
  for (int i = 0; i < out.spec.t; ++i) {
    Rat sum = 0;
    for (int j = 0; j < out.spec.orders[i]; ++j)
      sum += out.stationary[base[i] + j];
    if (sum != r) throw std::logic_error("zeta: chain sum != r");
  }
  if (vec_sum(out.stationary) != r * out.spec.t)
    throw std::logic_error("zeta: total != t*r");
  return out;
}

namespace {

// vertex order of the A_n path, starting from a degree-1 endpoint
std::vector<int> path_order(const HasseGraph& g) {
  auto deg = g.degree();
  auto adj = g.adjacency();
  int start = -1;
  for (int i = 0; i < g.n; ++i)
    if (deg[i] <= 1) {
      start = i;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < g.n) {
    int nxt = -1;
    for (int nb : adj[cur])
      if (nb != prev) nxt = nb;
    if (nxt < 0) break;
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return order;
}

}  // namespace

Recognition recognize(const Poset& p) {
  StructureReport rep = structure(p);
  if (!rep.connected) throw NotConnected();
  Recognition out;
  if (rep.width == 1) {
    out.shape = Shape::Chain;
    return out;
  }
  GammaClass gc = gamma_class(p);
  if (gc.kind != GammaKind::An) return out;  // Other
  Hasse h = hasse(p);
  std::vector<int> order = path_order(h.graph);
  // direction runs: true = arrow along the walk
  std::vector<std::pair<bool, int>> runs;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    bool along = h.quiver.has_arrow(order[i], order[i + 1]);
    if (!runs.empty() && runs.back().first == along) ++runs.back().second;
    else runs.emplace_back(along, 1);
  }
  const int k = static_cast<int>(runs.size());
  if (k < 3 || k % 2 == 0) return out;
  for (int i = 1; i < k; i += 2)
    if (runs[i].second != 1) return out;  // cross edges are single
  std::vector<int> orders;
  for (int i = 0; i < k; i += 2) orders.push_back(runs[i].second + 1);
  // reading direction: chains run against the walk when starting at z_1^+
  if (runs[0].first) std::reverse(orders.begin(), orders.end());
  if (!isomorphic(p, wattle(orders))) {
    std::reverse(orders.begin(), orders.end());
    if (!isomorphic(p, wattle(orders))) return out;
  }
  out.wattle = make_wattle_spec(orders);
  // Lemma 12 parity: junction components of a wattle all have order 2
  for (const auto& comp : rep.junction_components)
    if (comp.size() % 2 != 0)
      throw ConsistencyAlarm("wattle with odd junction component");
  ZetaResult z = zeta_generate(out.wattle->r);
  std::vector<int> rev = z.spec.orders;
  std::reverse(rev.begin(), rev.end());
  out.shape = (orders == z.spec.orders || orders == rev) ? Shape::RSet
                                                         : Shape::Wattle;
  return out;
}

std::vector<Poset> critical_list_I() {
  return {primitive({1, 1, 1, 1}), primitive({2, 2, 2}), primitive({1, 3, 3}),
          primitive({1, 2, 5}), disjoint_union(chain(4), wattle({2, 2}))};
}

std::vector<Poset> critical_list_II() {
  return {primitive({1, 1, 1, 1, 1}), primitive({1, 1, 1, 2}),
          primitive({2, 2, 3}),       primitive({1, 3, 4}),
          primitive({1, 2, 6}),       disjoint_union(chain(5), wattle({2, 2}))};
}

bool is_utmost(const Poset& p, int cap, bool all_subsets) {
  if (p_value(p, cap) < 4) return false;
  const int n = p.n();
  if (all_subsets) {
    if (n > 10) throw CapExceeded("all-subsets utmost check needs n <= 10");
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) keep.push_back(i);
      if (p_value(induced_subposet(p, keep), cap) > 4) return false;
    }
    return true;
  }
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    if (keep.empty()) continue;
    if (p_value(induced_subposet(p, keep), cap) > 4) return false;
  }
  return true;
}

RepType rep_type(const Poset& p, int cap) {
  Rat pv = p_value(p, cap);
  RepType by_p = pv < 4 ? RepType::Finite
                        : (pv == 4 ? RepType::Tame : RepType::Wild);
  auto contains_any = [&](const std::vector<Poset>& list) {
    for (const auto& q : list)
      if (q.n() <= p.n() && contains_induced(p, q)) return true;
    return false;
  };
  bool has_I = contains_any(critical_list_I());
  bool has_II = contains_any(critical_list_II());
  RepType by_list = !has_I ? RepType::Finite
                           : (!has_II ? RepType::Tame : RepType::Wild);
  if (by_p != by_list)
    throw ConsistencyAlarm("P threshold disagrees with critical-list containment");
  return by_p;
}

Classification classify(const Poset& p, int cap) {
  Classification c;
  if (structure(p).connected) {
    Recognition rec = recognize(p);
    c.shape = rec.shape;
    c.wattle = rec.wattle;
    if (c.shape == Shape::RSet) c.r = rec.wattle->r;
  }
  c.p_value = p_value(p, cap);
  c.rep = rep_type(p, cap);
  for (const auto& q : critical_list_I())
    if (isomorphic(p, q)) c.in_list_I = true;
  for (const auto& q : critical_list_II())
    if (isomorphic(p, q)) c.in_list_II = true;
  c.utmost = is_utmost(p, cap);
  auto w = c_cone(form_of_poset(p));
  c.antimonotonous = !w.has_value();
  c.c_witness = w;
  c.p_faithful = faithful_witness(p).has_value();
  return c;
}

}  // namespace posetform
