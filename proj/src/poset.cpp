#include "posetform/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace posetform {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

}  // namespace

Poset Poset::from_pairs0(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0 || n > 31) throw BadParams("poset size must be in [0,31]");
  Poset p;
  p.n_ = n;
  p.lt_.assign(n, 0);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n || i == j) throw IndexOutOfRange();
    p.lt_[i] |= 1u << j;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((p.lt_[i] >> k) & 1u) p.lt_[i] |= p.lt_[k];
  for (int i = 0; i < n; ++i) {
    if ((p.lt_[i] >> i) & 1u) throw CycleInOrder();
    for (int j = 0; j < n; ++j)
      if (p.less(i, j) && p.less(j, i)) throw CycleInOrder();
  }
  return p;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> zero;
  zero.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange();
    zero.emplace_back(i - 1, j - 1);
  }
  return from_pairs0(n, zero);
}

std::uint32_t Poset::below_mask(int i) const {
  std::uint32_t m = 0;
  for (int j = 0; j < n_; ++j)
    if (less(j, i)) m |= 1u << j;
  return m;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) out.emplace_back(i + 1, j + 1);
  return out;
}

bool HasseQuiver::has_arrow(int i, int j) const {
  return std::find(arrows.begin(), arrows.end(), std::make_pair(i, j)) !=
         arrows.end();
}

std::vector<int> HasseGraph::degree() const {
  std::vector<int> d(n, 0);
  for (auto [a, b] : edges) ++d[a], ++d[b];
  return d;
}

std::vector<std::vector<int>> HasseGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) adj[a].push_back(b), adj[b].push_back(a);
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::vector<int> HasseGraph::component_of() const {
  std::vector<int> comp(n, -1);
  auto adj = adjacency();
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (comp[w] < 0) comp[w] = c, q.push(w);
    }
    ++c;
  }
  return comp;
}

bool HasseGraph::connected() const {
  if (n <= 1) return true;
  auto comp = component_of();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

Hasse hasse(const Poset& p) {
  Hasse h;
  h.quiver.n = h.graph.n = p.n();
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j) {
      if (!p.less(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < p.n() && cover; ++k)
        if (p.less(i, k) && p.less(k, j)) cover = false;
      if (cover) {
        h.quiver.arrows.emplace_back(i, j);
        h.graph.edges.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
  std::sort(h.graph.edges.begin(), h.graph.edges.end());
  return h;
}

namespace {

// Shortest cycle through BFS per edge; shortest cycles are chordless.
std::optional<std::vector<int>> find_simple_cycle(const HasseGraph& g) {
  auto adj = g.adjacency();
  std::optional<std::vector<int>> best;
  for (auto [a, b] : g.edges) {
    std::vector<int> prev(g.n, -2);
    std::queue<int> q;
    prev[a] = -1;
    q.push(a);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if ((v == a && w == b) || (v == b && w == a)) continue;
        if (prev[w] != -2) continue;
        prev[w] = v;
        q.push(w);
      }
    }
    if (prev[b] == -2) continue;
    std::vector<int> path;
    for (int v = b; v != -1; v = prev[v]) path.push_back(v);
    if (!best || path.size() < best->size()) best = path;
  }
  return best;
}

}  // namespace

int poset_width(const Poset& p) {
  const int n = p.n();
  std::vector<std::uint32_t> incomp(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !p.comparable(i, j)) incomp[i] |= 1u << j;
  // max clique in the incomparability graph
  int best = 0;
  auto rec = [&](auto&& self, std::uint32_t cand, int size) -> void {
    if (size + popcount(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    int v = std::countr_zero(cand);
    self(self, (cand & ~(1u << v)) & incomp[v], size + 1);  // take v
    self(self, cand & ~(1u << v), size);                    // skip v
  };
  rec(rec, n >= 32 ? ~0u : ((1u << n) - 1), 0);
  return best;
}

StructureReport structure(const Poset& p) {
  StructureReport r;
  const int n = p.n();
  Hasse h = hasse(p);
  auto comp = h.graph.component_of();
  int nc = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
  r.components.assign(nc, {});
  for (int i = 0; i < n; ++i) r.components[comp[i]].push_back(i);
  r.connected = nc <= 1;

  r.incidence.assign(n, 0);
  for (auto [a, b] : h.graph.edges) ++r.incidence[a], ++r.incidence[b];
  for (int i = 0; i < n; ++i) {
    if (r.incidence[i] <= 1) r.terminal_points.push_back(i);
    if (r.incidence[i] >= 3) r.branch_points.push_back(i);
  }

  r.simple_cycle = find_simple_cycle(h.graph);
  r.cyclic = r.simple_cycle.has_value();

  std::vector<int> in(n, 0), out(n, 0);
  for (auto [a, b] : h.quiver.arrows) ++out[a], ++in[b];
  std::vector<bool> junction(n, false);
  for (int i = 0; i < n; ++i)
    if (in[i] >= 2 || out[i] >= 2) {
      junction[i] = true;
      r.junction_points.push_back(i);
    }

  // connectivity classes of S^x inside Gamma(S)
  {
    std::vector<int> jcomp(n, -1);
    auto adj = h.graph.adjacency();
    int c = 0;
    for (int s : r.junction_points) {
      if (jcomp[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      jcomp[s] = c;
      r.junction_components.push_back({});
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        r.junction_components.back().push_back(v);
        for (int w : adj[v])
          if (junction[w] && jcomp[w] < 0) jcomp[w] = c, q.push(w);
      }
      std::sort(r.junction_components.back().begin(),
                r.junction_components.back().end());
      ++c;
    }
  }

  r.width = poset_width(p);
  return r;
}

const char* gamma_kind_name(GammaKind k) {
  switch (k) {
    case GammaKind::Chain: return "Chain";
    case GammaKind::An: return "A_n";
    case GammaKind::Dn: return "D_n";
    case GammaKind::E6: return "E6";
    case GammaKind::E7: return "E7";
    case GammaKind::E8: return "E8";
    case GammaKind::ExtendedD: return "ExtendedD";
    case GammaKind::ExtendedE6: return "ExtendedE6";
    case GammaKind::ExtendedE7: return "ExtendedE7";
    case GammaKind::ExtendedE8: return "ExtendedE8";
    case GammaKind::CycleATilde: return "CycleA~";
    case GammaKind::Star: return "Star";
    case GammaKind::Other: return "Other";
  }
  return "Other";
}

namespace {

// Arm lengths (vertex counts including the center) of a star graph.
std::vector<int> star_arms(const HasseGraph& g, int center) {
  auto adj = g.adjacency();
  std::vector<int> arms;
  for (int first : adj[center]) {
    int len = 2, prev = center, v = first;
    while (adj[v].size() == 2) {
      int next = adj[v][0] == prev ? adj[v][1] : adj[v][0];
      prev = v;
      v = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

GammaClass gamma_class(const Poset& p) {
  Hasse h = hasse(p);
  if (!h.graph.connected()) throw NotConnected();
  const int n = p.n();
  GammaClass gc;
  if (n <= 1) {
    gc.kind = GammaKind::Chain;
    return gc;
  }
  auto deg = h.graph.degree();
  int maxdeg = *std::max_element(deg.begin(), deg.end());
  const int m = static_cast<int>(h.graph.edges.size());
  bool tree = (m == n - 1);

  if (maxdeg <= 2) {
    if (!tree) {
      gc.kind = GammaKind::CycleATilde;  // connected, all degrees 2
      return gc;
    }
    gc.kind = (poset_width(p) == 1) ? GammaKind::Chain : GammaKind::An;
    return gc;
  }

  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (deg[i] >= 3) branch.push_back(i);

  if (!tree) {
    gc.kind = GammaKind::Other;
    return gc;
  }

  if (branch.size() == 1) {
    int c = branch[0];
    auto arms = star_arms(h.graph, c);
    gc.arms = arms;
    if (deg[c] == 4) {
      gc.kind = (arms == std::vector<int>{2, 2, 2, 2}) ? GammaKind::ExtendedD
                                                       : GammaKind::Other;
      return gc;
    }
    if (deg[c] > 4) {
      gc.kind = GammaKind::Other;
      return gc;
    }
    long a = arms[0], b = arms[1], cc = arms[2];
    long lhs = b * cc + a * cc + a * b, rhs = a * b * cc;  // sum 1/n_i vs 1
    if (lhs > rhs) {
      if (a == 2 && b == 2) gc.kind = GammaKind::Dn;
      else if (arms == std::vector<int>{2, 3, 3}) gc.kind = GammaKind::E6;
      else if (arms == std::vector<int>{2, 3, 4}) gc.kind = GammaKind::E7;
      else if (arms == std::vector<int>{2, 3, 5}) gc.kind = GammaKind::E8;
      else gc.kind = GammaKind::Star;  // unreachable for trees, kept defensive
    } else if (lhs == rhs) {
      if (arms == std::vector<int>{3, 3, 3}) gc.kind = GammaKind::ExtendedE6;
      else if (arms == std::vector<int>{2, 4, 4}) gc.kind = GammaKind::ExtendedE7;
      else gc.kind = GammaKind::ExtendedE8;  // (2,3,6)
    } else {
      gc.kind = GammaKind::Star;
    }
    return gc;
  }

  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    // extended D_n: both forks carry two pendant leaves
    auto adj = h.graph.adjacency();
    bool ok = true;
    for (int b : branch) {
      int leaves = 0;
      for (int w : adj[b])
        if (deg[w] == 1) ++leaves;
      if (leaves < 2) ok = false;
    }
    gc.kind = ok ? GammaKind::ExtendedD : GammaKind::Other;
    return gc;
  }

  gc.kind = GammaKind::Other;
  return gc;
}

Poset standardize(const HasseGraph& g) {
  const int n = g.n;
  auto deg = g.degree();
  auto comp = g.component_of();
  // acyclicity per component: edges = vertices - components
  {
    int nc = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    if (static_cast<int>(g.edges.size()) != n - nc) throw CyclicGraph();
  }
  auto adj = g.adjacency();

  // Contract maximal degree-2 runs between "node" vertices, then 2-color
  // the nodes source/sink over the contracted tree.
  std::vector<int> role(n, 0);  // +1 source, -1 sink, 0 undecided/flow-through
  std::vector<std::pair<int, int>> arrows;

  struct SuperEdge {
    int a, b;                // node endpoints
    std::vector<int> path;   // full vertex path a..b
  };
  std::vector<SuperEdge> super;
  std::vector<std::vector<int>> node_edges(n);

  std::vector<std::vector<bool>> used(n);
  for (int i = 0; i < n; ++i) used[i].assign(adj[i].size(), false);

  for (int v = 0; v < n; ++v) {
    if (deg[v] == 2) continue;  // not a node
    for (std::size_t k = 0; k < adj[v].size(); ++k) {
      if (used[v][k]) continue;
      SuperEdge se;
      se.a = v;
      se.path.push_back(v);
      used[v][k] = true;
      int prev = v, cur = adj[v][k];
      while (deg[cur] == 2) {
        se.path.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      }
      se.path.push_back(cur);
      se.b = cur;
      for (std::size_t j = 0; j < adj[cur].size(); ++j)
        if (adj[cur][j] == prev) used[cur][j] = true;
      int id = static_cast<int>(super.size());
      super.push_back(se);
      node_edges[se.a].push_back(id);
      node_edges[se.b].push_back(id);
    }
  }

  for (int s = 0; s < n; ++s) {
    if (deg[s] == 2 || role[s] != 0) continue;
    role[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : node_edges[v]) {
        int w = super[id].a == v ? super[id].b : super[id].a;
        if (w == v) continue;
        if (role[w] == 0) role[w] = -role[v], q.push(w);
      }
    }
  }

  for (const auto& se : super) {
    auto path = se.path;
    if (role[se.a] == -1) std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      arrows.emplace_back(path[i], path[i + 1]);
  }

  return Poset::from_pairs0(n, arrows);
}

Poset antiisomorph(const Poset& p) {
  std::vector<std::pair<int, int>> rev;
  for (auto [i, j] : p.relations()) rev.emplace_back(j - 1, i - 1);
  return Poset::from_pairs0(p.n(), rev);
}

Poset reorient(const Poset& p, int from, int to) {
  Hasse h = hasse(p);
  if (!h.quiver.has_arrow(from, to)) throw InvalidArrow();
  std::vector<std::pair<int, int>> arrows;
  for (auto [a, b] : h.quiver.arrows) {
    if (a == from && b == to) arrows.emplace_back(b, a);
    else arrows.emplace_back(a, b);
  }
  Poset q = Poset::from_pairs0(p.n(), arrows);  // throws CycleInOrder if bad
  // the flipped quiver must still be the transitive reduction
  Hasse hq = hasse(q);
  std::sort(arrows.begin(), arrows.end());
  if (hq.quiver.arrows != arrows) throw InvalidArrow();
  return q;
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : a.relations()) pairs.emplace_back(i - 1, j - 1);
  for (auto [i, j] : b.relations()) pairs.emplace_back(a.n() + i - 1, a.n() + j - 1);
  return Poset::from_pairs0(a.n() + b.n(), pairs);
}

std::vector<std::vector<int>> connected_components(const Poset& p) {
  return structure(p).components;
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elements) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (p.less(elements[a], elements[b]))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_pairs0(static_cast<int>(elements.size()), pairs);
}

// --- families ---

Poset chain(int n) {
  if (n < 1) throw BadParams("chain: n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs0(n, pairs);
}

Poset antichain(int n) {
  if (n < 1) throw BadParams("antichain: n >= 1");
  return Poset::from_pairs0(n, {});
}

Poset primitive(const std::vector<int>& chain_orders) {
  if (chain_orders.empty()) throw BadParams("primitive: at least one chain");
  Poset p = chain(chain_orders[0]);
  for (std::size_t i = 1; i < chain_orders.size(); ++i)
    p = disjoint_union(p, chain(chain_orders[i]));
  return p;
}

Poset crown(int k) {
  if (k < 2) throw BadParams("crown: k >= 2");
  // s_i^- at i, s_i^+ at k+i; s_i^- < s_i^+ and s_i^- < s_{i+1}^+ cyclically
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(i, k + i);
    pairs.emplace_back(i, k + (i + 1) % k);
  }
  return Poset::from_pairs0(2 * k, pairs);
}

Poset fence(int a, int b) {
  if (a < 1 || b < 1 || std::abs(a - b) != 1)
    throw BadParams("fence: sizes must differ by one");
  // W^{k,k+1}: k minus points (0..k-1), k+1 plus points (k..2k)
  // W^{k+1,k}: the antiisomorph with roles swapped
  if (b == a + 1) {
    int k = a;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
      pairs.emplace_back(i, k + i);
      pairs.emplace_back(i, k + i + 1);
    }
    return Poset::from_pairs0(2 * k + 1, pairs);
  }
  int k = b;  // a == k+1 minus points, k plus points
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(i, k + 1 + i);
    pairs.emplace_back(i + 1, k + 1 + i);
  }
  return Poset::from_pairs0(2 * k + 1, pairs);
}

Poset family_V() {
  return Poset::from_pairs0(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset wattle(const std::vector<int>& orders) {
  if (orders.empty()) throw BadParams("wattle: empty order list");
  const int t = static_cast<int>(orders.size());
  for (int ni : orders)
    if (ni < 1 || (t > 1 && ni < 2))
      throw BadParams("wattle: chain orders must be >= 2 when t > 1");
  // chains laid out consecutively, each bottom to top
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> base(t);
  int n = 0;
  for (int i = 0; i < t; ++i) {
    base[i] = n;
    for (int j = 0; j + 1 < orders[i]; ++j)
      pairs.emplace_back(n + j, n + j + 1);
    n += orders[i];
  }
  // z_i^- = bottom of Z_i, z_{i+1}^+ = top of Z_{i+1}
  for (int i = 0; i + 1 < t; ++i)
    pairs.emplace_back(base[i], base[i + 1] + orders[i + 1] - 1);
  return Poset::from_pairs0(n, pairs);
}

namespace {

HasseGraph star_graph(const std::vector<int>& arms) {
  HasseGraph g;
  g.n = 1;
  for (int a : arms) {
    if (a < 2) throw BadParams("star: arm orders must be >= 2");
    g.n += a - 1;
  }
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int s = 0; s < a - 1; ++s) {
      g.edges.emplace_back(std::min(prev, next), std::max(prev, next));
      prev = next++;
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

Poset standard_star(const std::vector<int>& arms) {
  if (arms.size() < 3) throw BadParams("star: need at least 3 arms");
  return standardize(star_graph(arms));
}

Poset standard_dtilde(int n) {
  if (n < 4) throw BadParams("extended D_n: n >= 4");
  if (n == 4) return standard_star({2, 2, 2, 2});
  // central path of n-3 vertices, two pendant leaves at each end
  HasseGraph g;
  g.n = n + 1;
  int path_len = n - 3;
  // path vertices 0..path_len-1, leaves path_len..path_len+3
  for (int i = 0; i + 1 < path_len; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(0, path_len);
  g.edges.emplace_back(0, path_len + 1);
  g.edges.emplace_back(path_len - 1, path_len + 2);
  g.edges.emplace_back(path_len - 1, path_len + 3);
  for (auto& [a, b] : g.edges)
    if (a > b) std::swap(a, b);
  std::sort(g.edges.begin(), g.edges.end());
  return standardize(g);
}

Poset standard_dn(int n) {
  if (n < 4) throw BadParams("D_n: n >= 4");
  return standard_star({2, 2, n - 2});
}

std::optional<std::vector<int>> contains_induced(const Poset& p, const Poset& q) {
  const int np = p.n(), nq = q.n();
  if (nq > np) return std::nullopt;
  std::vector<int> img(nq, -1);
  std::vector<bool> used(np, false);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == nq) return true;
    for (int v = 0; v < np; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l) {
        if (q.less(k, l) != p.less(v, img[l])) ok = false;
        if (q.less(l, k) != p.less(img[l], v)) ok = false;
      }
      if (!ok) continue;
      img[k] = v;
      used[v] = true;
      if (self(self, k + 1)) return true;
      used[v] = false;
      img[k] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

namespace {

// Iso-invariant element classes via two refinement rounds on (down, up).
std::vector<int> invariant_classes(const Poset& p) {
  const int n = p.n();
  std::vector<std::vector<long>> sig(n);
  std::vector<int> cls(n, 0);
  for (int round = 0; round < 3; ++round) {
    for (int i = 0; i < n; ++i) {
      sig[i].clear();
      sig[i].push_back(popcount(p.below_mask(i)));
      sig[i].push_back(popcount(p.above_mask(i)));
      std::vector<long> down, up;
      for (int j = 0; j < n; ++j) {
        if (p.less(j, i)) down.push_back(cls[j]);
        if (p.less(i, j)) up.push_back(cls[j]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), down.begin(), down.end());
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), up.begin(), up.end());
    }
    std::map<std::vector<long>, int> ids;
    for (int i = 0; i < n; ++i) ids.emplace(sig[i], 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (int i = 0; i < n; ++i) cls[i] = ids[sig[i]];
  }
  return cls;
}

struct CanonState {
  const Poset* p;
  int n;
  std::vector<int> class_of_pos;  // required class per position
  std::vector<int> cls;
  std::vector<int> perm;          // position -> element
  std::vector<bool> used;
  std::string cur, best;
  bool have_best = false;

  // encoding appended at depth t: bits less(perm[s],e), less(e,perm[s])
  void dfs(int t, bool tie) {
    if (t == n) {
      if (!have_best || (tie ? false : cur < best)) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (used[e] || cls[e] != class_of_pos[t]) continue;
      std::size_t mark = cur.size();
      for (int s = 0; s < t; ++s) cur.push_back(p->less(perm[s], e) ? '1' : '0');
      for (int s = 0; s < t; ++s) cur.push_back(p->less(e, perm[s]) ? '1' : '0');
      bool next_tie = tie;
      bool prune = false;
      if (have_best && tie) {
        int c = cur.compare(0, cur.size(), best, 0, cur.size());
        if (c > 0) prune = true;
        else if (c < 0) next_tie = false;
      }
      if (!prune) {
        used[e] = true;
        perm[t] = e;
        dfs(t + 1, next_tie);
        used[e] = false;
      }
      cur.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_key(const Poset& p) {
  const int n = p.n();
  CanonState st;
  st.p = &p;
  st.n = n;
  st.cls = invariant_classes(p);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return st.cls[a] < st.cls[b]; });
  st.class_of_pos.resize(n);
  for (int t = 0; t < n; ++t) st.class_of_pos[t] = st.cls[order[t]];
  st.perm.resize(n);
  st.used.assign(n, false);
  st.dfs(0, true);
  // class profile distinguishes posets whose encodings alone could collide
  std::string key = std::to_string(n) + ":";
  for (int t = 0; t < n; ++t) key += std::to_string(st.class_of_pos[t]) + ",";
  key += ";" + st.best;
  return key;
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<Poset> enumerate_posets(int n, bool connected_only, int cap) {
  if (n < 1) throw BadParams("enumerate: n >= 1");
  if (n > cap) throw CapExceeded("enumerate: n exceeds cap " + std::to_string(cap));
  std::vector<Poset> cur = {chain(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Poset> next;
    std::unordered_set<std::string> seen;
    for (const Poset& p : cur) {
      std::vector<std::uint32_t> below(k);
      for (int i = 0; i < k; ++i) below[i] = p.below_mask(i);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool downset = true;
        for (int i = 0; i < k && downset; ++i)
          if ((mask >> i) & 1u)
            if ((below[i] & mask) != below[i]) downset = false;
        if (!downset) continue;
        std::vector<std::pair<int, int>> pairs;
        for (auto [i, j] : p.relations()) pairs.emplace_back(i - 1, j - 1);
        for (int i = 0; i < k; ++i)
          if ((mask >> i) & 1u) pairs.emplace_back(i, k);
        Poset q = Poset::from_pairs0(k + 1, pairs);
        if (seen.insert(canonical_key(q)).second) next.push_back(std::move(q));
      }
    }
    cur = std::move(next);
  }
  if (connected_only) {
    std::vector<Poset> filtered;
    for (auto& p : cur)
      if (connected_components(p).size() <= 1) filtered.push_back(std::move(p));
    cur = std::move(filtered);
  }
  return cur;
}

}  // namespace posetform
