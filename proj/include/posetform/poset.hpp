#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <stdexcept>

namespace posetform {

struct CycleInOrder : std::runtime_error {
  CycleInOrder() : std::runtime_error("relation closure creates a cycle") {}
};
struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange() : std::runtime_error("element index out of range") {}
};
struct NotConnected : std::runtime_error {
  NotConnected() : std::runtime_error("Hasse graph is not connected") {}
};
struct CyclicGraph : std::runtime_error {
  CyclicGraph() : std::runtime_error("graph contains a cycle") {}
};
struct InvalidArrow : std::runtime_error {
  InvalidArrow() : std::runtime_error("not an arrow of the Hasse quiver") {}
};
struct BadParams : std::runtime_error {
  explicit BadParams(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Finite strict partial order on {0,..,n-1}, stored as the full transitive
// closure in bit rows. Public I/O is 1-based to match the usual subscripts.
class Poset {
 public:
  Poset() = default;

  // pairs are 1-based (i, j) meaning s_i < s_j; closure is taken here.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

  // 0-based variant for internal construction.
  static Poset from_pairs0(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return n_; }
  bool less(int i, int j) const { return (lt_[i] >> j) & 1u; }  // 0-based
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  std::uint32_t below_mask(int i) const;  // elements strictly below i
  std::uint32_t above_mask(int i) const { return lt_[i]; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  // 1-based relation list of the closure, lexicographic.
  std::vector<std::pair<int, int>> relations() const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && lt_ == o.lt_; }

 private:
  int n_ = 0;
  std::vector<std::uint32_t> lt_;  // bit j of lt_[i]: s_i < s_j
  std::vector<std::string> labels_;
};

struct HasseQuiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // 0-based, lexicographic
  bool has_arrow(int i, int j) const;
};

struct HasseGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, i < j
  std::vector<int> degree() const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> component_of() const;
  bool connected() const;
};

struct Hasse {
  HasseQuiver quiver;
  HasseGraph graph;
};

Hasse hasse(const Poset& p);

struct StructureReport {
  bool connected = false;
  std::vector<std::vector<int>> components;         // Gamma components, 0-based
  bool cyclic = false;
  std::optional<std::vector<int>> simple_cycle;     // a chordless cycle
  std::vector<int> junction_points;                 // S^x
  std::vector<std::vector<int>> junction_components;
  int width = 0;
  std::vector<int> terminal_points;                 // I(s) <= 1
  std::vector<int> branch_points;                   // I(s) >= 3
  std::vector<int> incidence;                       // I(s_i), Gamma degree
};

StructureReport structure(const Poset& p);

int poset_width(const Poset& p);

enum class GammaKind {
  Chain, An, Dn, E6, E7, E8,
  ExtendedD, ExtendedE6, ExtendedE7, ExtendedE8,
  CycleATilde, Star, Other,
};

struct GammaClass {
  GammaKind kind = GammaKind::Other;
  std::vector<int> arms;  // star arm chain orders (vertex counts incl. center)
};

const char* gamma_kind_name(GammaKind k);

// Requires Gamma(P) connected.
GammaClass gamma_class(const Poset& p);

// Unique (up to antiisomorphism) standard orientation of an acyclic graph:
// degree-2 vertices flow through, the rest are pure sources or sinks.
Poset standardize(const HasseGraph& g);

Poset antiisomorph(const Poset& p);

// Flip one Hasse arrow (0-based endpoints) and re-close.
Poset reorient(const Poset& p, int from, int to);

Poset disjoint_union(const Poset& a, const Poset& b);

std::vector<std::vector<int>> connected_components(const Poset& p);
Poset induced_subposet(const Poset& p, const std::vector<int>& elements);

// --- canonical families ---
Poset chain(int n);
Poset antichain(int n);
Poset primitive(const std::vector<int>& chain_orders);  // disjoint chains
Poset crown(int k);                                     // W^{2k}, k >= 2
Poset fence(int a, int b);                              // W^{k,k+1} / W^{k+1,k}
Poset family_V();
Poset wattle(const std::vector<int>& orders);           // <n_1,...,n_t>
Poset standard_star(const std::vector<int>& arms);      // arms incl. center
Poset standard_dtilde(int n);                           // extended D_n, n >= 4
Poset standard_dn(int n);                               // Dynkin D_n, n >= 4

// Injective order-preserving-and-reflecting map of q into p, or nullopt.
// result[k] = image of element k of q.
std::optional<std::vector<int>> contains_induced(const Poset& p, const Poset& q);

// Canonical isomorphism key (minimal encoding over permutations).
std::string canonical_key(const Poset& p);
bool isomorphic(const Poset& a, const Poset& b);

// One representative per isomorphism class. cap guards runtime.
std::vector<Poset> enumerate_posets(int n, bool connected_only = false, int cap = 7);

}  // namespace posetform
