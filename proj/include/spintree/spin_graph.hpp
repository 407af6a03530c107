#pragma once

#include "spintree/heisenberg.hpp"
#include "spintree/partition_tree.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spintree {

// Simple undirected graph on sites 1..n (uniform-coupling interaction graph).
class SpinGraph {
 public:
  explicit SpinGraph(int n);
  static SpinGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool adjacent(int mu, int nu) const;
  void set_edge(int mu, int nu, bool present = true);
  std::vector<std::pair<int, int>> edges() const;  // sorted, mu < nu
  int edge_count() const;
  CouplingMatrix couplings(double weight = 1.0) const;
  bool connected() const;
  SpinGraph complement() const;

 private:
  int n_;
  std::vector<char> adj_;  // packed upper triangle
};

// Lexicographically first induced 4-chain a-b-c-d (edges ab, bc, cd present,
// ac, ad, bd absent), scanning ordered tuples with a < d to fix orientation.
std::optional<std::array<int, 4>> find_induced_4chain(const SpinGraph& g);

struct IntegrabilityVerdict {
  bool integrable = false;
  std::optional<BJSystem> system;          // present when integrable
  std::optional<std::array<int, 4>> chain; // witness when not integrable
};

// Recursive complement decomposition.  Disconnected graphs split off the
// component holding the smallest vertex (union coupling 0); connected graphs
// fold their complement components in order of smallest vertex (coupling 1).
// Graphs whose complement stays connected are exactly those with an induced
// 4-chain, which is returned as the witness.
IntegrabilityVerdict decompose(const SpinGraph& g);

// Weighted generalization of decompose: reconstruct a coupled tree system
// whose meet rule reproduces J exactly (double equality), if one exists.
// At each level the candidate root values (the distinct pair couplings,
// ascending) are tried: value c works when the graph of pairs with J != c
// falls apart; its components are folded like the uniform case (right fold
// for c = 0, left fold otherwise).  On uniform 0/1 couplings this recovers
// decompose(g) exactly.
std::optional<BJSystem> decompose_couplings(const CouplingMatrix& j);

// Canonical form: pack the adjacency bits in the order
// (1,2),(1,3),(2,3),(1,4),(2,4),(3,4),... with earlier pairs more
// significant, and minimise the resulting word over all vertex relabelings.
std::uint64_t canonical_word(const SpinGraph& g);
SpinGraph graph_from_word(int n, std::uint64_t word);

// One representative per isomorphism class of connected graphs, in ascending
// canonical-word order.  Supported for 1 <= n <= 7.
std::vector<SpinGraph> enumerate_connected_graphs(int n);

}  // namespace spintree
