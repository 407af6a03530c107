#include "spintree/partition_tree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spintree {

namespace {

std::string set_to_string(const std::vector<int>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

// Canonical node order: size ascending, then members lexicographically.
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TreeCheck validate_family(int n, const std::vector<std::vector<int>>& sets) {
  if (n < 1) return {false, 1, "site count must be at least 1"};

  std::vector<std::vector<int>> fam;
  fam.reserve(sets.size());
  for (auto s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    fam.push_back(std::move(s));
  }

  // Clause 1: no empty set, valid labels, and the full set is present.
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i + 1;
  bool has_root = false;
  for (const auto& s : fam) {
    if (s.empty()) return {false, 1, "family contains the empty set"};
    if (s.front() < 1 || s.back() > n)
      return {false, 1, "set " + set_to_string(s) + " has labels outside 1.." +
                            std::to_string(n)};
    if (s == full) has_root = true;
  }
  if (!has_root)
    return {false, 1, "full set " + set_to_string(full) + " is missing"};

  // Clause 2: pairwise nested or disjoint.
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t k = i + 1; k < fam.size(); ++k) {
      const auto &a = fam[i], &b = fam[k];
      if (!disjoint(a, b) && !is_subset(a, b) && !is_subset(b, a))
        return {false, 2, "sets " + set_to_string(a) + " and " +
                              set_to_string(b) + " overlap without nesting"};
    }

  // Deduplicate for the structural clauses.
  std::set<std::vector<int>> distinct(fam.begin(), fam.end());

  // Clause 3: every non-singleton is the disjoint union of two member sets.
  for (const auto& s : distinct) {
    if (s.size() == 1) continue;
    // Maximal proper subsets within the family.
    std::vector<std::vector<int>> children;
    for (const auto& c : distinct) {
      if (c == s || !is_subset(c, s)) continue;
      bool maximal = true;
      for (const auto& d : distinct)
        if (d != s && d != c && is_subset(c, d) && is_subset(d, s)) {
          maximal = false;
          break;
        }
      if (maximal) children.push_back(c);
    }
    std::size_t covered = 0;
    for (const auto& c : children) covered += c.size();
    if (children.size() != 2 || covered != s.size())
      return {false, 3, "set " + set_to_string(s) + " does not split into two member sets"};
  }

  // Clause 4: exactly 2n-1 distinct sets.
  if (static_cast<int>(distinct.size()) != 2 * n - 1)
    return {false, 4, "family has " + std::to_string(distinct.size()) +
                          " distinct sets, expected " + std::to_string(2 * n - 1)};
  return {};
}

PartitionTree PartitionTree::from_sets(int n, std::vector<std::vector<int>> sets) {
  TreeCheck check = validate_family(n, sets);
  if (!check.ok) throw std::invalid_argument("invalid partition tree: " + check.message);

  PartitionTree t;
  t.n_ = n;
  std::set<std::vector<int>> distinct;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    distinct.insert(std::move(s));
  }
  t.nodes_.reserve(distinct.size());
  std::vector<std::vector<int>> ordered(distinct.begin(), distinct.end());
  std::sort(ordered.begin(), ordered.end(), canonical_less);
  for (auto& s : ordered) {
    Node nd;
    nd.members = std::move(s);
    t.nodes_.push_back(std::move(nd));
  }

  // Parent of a node: the smallest strict superset in the family.
  for (int i = 0; i + 1 < t.node_count(); ++i) {
    int best = -1;
    for (int k = 0; k < t.node_count(); ++k) {
      if (k == i) continue;
      if (t.nodes_[k].members.size() <= t.nodes_[i].members.size()) continue;
      if (!is_subset(t.nodes_[i].members, t.nodes_[k].members)) continue;
      if (best < 0 || t.nodes_[k].members.size() < t.nodes_[best].members.size())
        best = k;
    }
    t.nodes_[i].parent = best;
    auto& p = t.nodes_[best];
    if (p.child1 < 0) p.child1 = i;
    else p.child2 = i;
  }
  // Order children so child1 holds the smaller minimum element.
  for (auto& nd : t.nodes_) {
    if (nd.child1 >= 0 && nd.child2 >= 0 &&
        t.nodes_[nd.child2].members.front() < t.nodes_[nd.child1].members.front())
      std::swap(nd.child1, nd.child2);
  }
  return t;
}

PartitionTree PartitionTree::trivial(int n_equals_one) {
  if (n_equals_one != 1)
    throw std::invalid_argument("trivial tree is defined for a single site");
  return from_sets(1, {{1}});
}

int PartitionTree::leaf(int mu) const {
  if (mu < 1 || mu > n_) throw std::out_of_range("site index out of range");
  return mu - 1;  // singletons sort first, in label order
}

std::vector<int> PartitionTree::internal_nodes() const {
  std::vector<int> out;
  for (int i = n_; i < node_count(); ++i) out.push_back(i);
  return out;
}

int PartitionTree::meet(int mu, int nu) const {
  std::vector<char> mark(nodes_.size(), 0);
  for (int i = leaf(mu); i >= 0; i = nodes_[i].parent) mark[i] = 1;
  for (int i = leaf(nu); i >= 0; i = nodes_[i].parent)
    if (mark[i]) return i;
  throw std::logic_error("tree has no common ancestor");  // unreachable
}

std::vector<int> PartitionTree::construction_path(int mu) const {
  std::vector<int> path;
  for (int i = leaf(mu); i >= 0; i = nodes_[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());  // root first
  return path;
}

std::optional<int> PartitionTree::find(const std::vector<int>& members) const {
  std::vector<int> key = members;
  std::sort(key.begin(), key.end());
  for (int i = 0; i < node_count(); ++i)
    if (nodes_[i].members == key) return i;
  return std::nullopt;
}

BJSystem BJSystem::make(PartitionTree tree, std::vector<double> j) {
  if (static_cast<int>(j.size()) != tree.node_count())
    throw std::invalid_argument("coupling vector size does not match node count");
  for (int i = 0; i < tree.node_count(); ++i) {
    if (!std::isfinite(j[i]))
      throw std::invalid_argument("coupling values must be finite");
    if (tree.is_leaf(i) && j[i] != 0.0)
      throw std::invalid_argument("singleton nodes must carry zero coupling");
  }
  return BJSystem{std::move(tree), std::move(j)};
}

double BJSystem::step_coefficient(int node_idx) const {
  int p = tree.node(node_idx).parent;
  return j[node_idx] - (p < 0 ? 0.0 : j[p]);
}

CouplingMatrix hamiltonian_couplings(const BJSystem& sys) {
  int n = sys.tree.n();
  CouplingMatrix out(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu)
      out.set(mu, nu, sys.j[sys.tree.meet(mu, nu)]);
  return out;
}

CasimirForm casimir_form(const BJSystem& sys) {
  CasimirForm form;
  form.coeff.resize(sys.tree.node_count());
  for (int i = 0; i < sys.tree.node_count(); ++i) {
    form.coeff[i] = sys.step_coefficient(i);
    if (sys.tree.is_leaf(i)) form.constant += 0.5 * form.coeff[i];
  }
  return form;
}

double casimir_energy(const CasimirForm& form, const PartitionTree& tree,
                      const SpinConfiguration& cfg) {
  double e = form.constant;
  for (int idx : tree.internal_nodes()) {
    Vec3 s = total_spin(cfg, tree.node(idx).members);
    e += 0.5 * form.coeff[idx] * s.norm2();
  }
  return e;
}

std::vector<CouplingMatrix> commuting_family_for_tree(const PartitionTree& tree) {
  std::vector<CouplingMatrix> family;
  for (int idx : tree.internal_nodes()) {
    const auto& nd = tree.node(idx);
    CouplingMatrix e(tree.n());
    for (int mu : tree.node(nd.child1).members)
      for (int nu : tree.node(nd.child2).members)
        e.set(std::min(mu, nu), std::max(mu, nu), 1.0);
    family.push_back(std::move(e));
  }
  return family;
}

}  // namespace spintree
