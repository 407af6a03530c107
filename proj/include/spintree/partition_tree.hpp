#pragma once

#include "spintree/heisenberg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spintree {

struct TreeCheck {
  bool ok = true;
  int clause = 0;       // 1..3 = nesting-definition clauses, 4 = node count
  std::string message;  // names the offending set(s)
};

// Validate a family of subsets of {1..n} as a binary nested partition:
//   (1) no empty set, and {1..n} itself is present;
//   (2) any two sets are nested or disjoint;
//   (3) every non-singleton set is the disjoint union of exactly two
//       member sets (its two children);
//   (4) exactly 2n-1 distinct sets.
// Returns the first violated clause.
TreeCheck validate_family(int n, const std::vector<std::vector<int>>& sets);

// Binary nested partition of {1..n}.  Nodes are stored in a canonical order:
// sorted by (size ascending, members lexicographically).  Leaves therefore
// occupy indices 0..n-1 as {1},...,{n} and the root is the last index.
class PartitionTree {
 public:
  struct Node {
    std::vector<int> members;  // sorted ascending, 1-based site labels
    int parent = -1;           // -1 at the root
    int child1 = -1, child2 = -1;  // -1 at leaves; child1 has the smaller minimum
  };

  // Throws std::invalid_argument (with the validate_family message) if the
  // family is not a partition tree.
  static PartitionTree from_sets(int n, std::vector<std::vector<int>> sets);

  // The single-leaf tree for n=1, or a convenience builder used in tests.
  static PartitionTree trivial(int n_equals_one = 1);

  int n() const { return n_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int idx) const { return nodes_[idx]; }
  int root() const { return node_count() - 1; }
  int leaf(int mu) const;  // index of {mu}
  bool is_leaf(int idx) const { return nodes_[idx].child1 < 0; }

  // Indices n..2n-2: all non-singleton nodes, canonical order.
  std::vector<int> internal_nodes() const;

  // Smallest node containing both sites.
  int meet(int mu, int nu) const;

  // All nodes containing mu, from the root down to the leaf {mu}.
  std::vector<int> construction_path(int mu) const;

  // Index of the node with exactly these members, if present.
  std::optional<int> find(const std::vector<int>& members) const;

 private:
  PartitionTree() = default;
  int n_ = 0;
  std::vector<Node> nodes_;
};

// A partition tree plus one coupling value per node.  Singleton couplings are
// identically zero; the (virtual) coupling above the root is zero as well.
struct BJSystem {
  PartitionTree tree;
  std::vector<double> j;  // indexed like tree nodes; leaves must carry 0

  // Throws on size mismatch, nonzero leaf coupling or non-finite values.
  static BJSystem make(PartitionTree tree, std::vector<double> j);

  double coupling_of(int node_idx) const { return j[node_idx]; }
  // J(M) - J(parent(M)); the root's parent coupling is 0.
  double step_coefficient(int node_idx) const;
};

// J_{mu nu} = j(meet(mu, nu)).
CouplingMatrix hamiltonian_couplings(const BJSystem& sys);

// H = 1/2 sum_M coeff(M) |S_M|^2 + constant, where coeff(M) = J(M)-J(parent)
// and the singleton terms (|S_{mu}|^2 = 1) are folded into the constant.
struct CasimirForm {
  std::vector<double> coeff;  // per node index (leaves included, for reference)
  double constant = 0.0;      // 1/2 * sum over leaves of coeff
};
CasimirForm casimir_form(const BJSystem& sys);
double casimir_energy(const CasimirForm& form, const PartitionTree& tree,
                      const SpinConfiguration& cfg);

// One observable per internal node M (canonical node order): entries 1 on the
// cross pairs (mu in child1, nu in child2), 0 elsewhere — the Heisenberg part
// of (|S_M|^2 - |S_M1|^2 - |S_M2|^2)/2.  n-1 matrices, pairwise commuting,
// independent.
std::vector<CouplingMatrix> commuting_family_for_tree(const PartitionTree& tree);

}  // namespace spintree
