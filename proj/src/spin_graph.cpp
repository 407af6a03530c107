#include "spintree/spin_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spintree {

SpinGraph::SpinGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

SpinGraph SpinGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SpinGraph g(n);
  for (auto [mu, nu] : edges) g.set_edge(mu, nu);
  return g;
}

bool SpinGraph::adjacent(int mu, int nu) const {
  if (mu == nu) return false;
  if (mu > nu) std::swap(mu, nu);
  return adj_[CouplingMatrix::pair_index(n_, mu, nu)] != 0;
}

void SpinGraph::set_edge(int mu, int nu, bool present) {
  if (mu == nu) throw std::invalid_argument("no self-loops");
  if (mu > nu) std::swap(mu, nu);
  if (mu < 1 || nu > n_) throw std::out_of_range("vertex out of range");
  adj_[CouplingMatrix::pair_index(n_, mu, nu)] = present ? 1 : 0;
}

std::vector<std::pair<int, int>> SpinGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int mu = 1; mu <= n_; ++mu)
    for (int nu = mu + 1; nu <= n_; ++nu)
      if (adjacent(mu, nu)) out.emplace_back(mu, nu);
  return out;
}

int SpinGraph::edge_count() const {
  int c = 0;
  for (char b : adj_) c += b;
  return c;
}

CouplingMatrix SpinGraph::couplings(double weight) const {
  CouplingMatrix j(n_);
  for (int mu = 1; mu <= n_; ++mu)
    for (int nu = mu + 1; nu <= n_; ++nu)
      if (adjacent(mu, nu)) j.set(mu, nu, weight);
  return j;
}

bool SpinGraph::connected() const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack = {1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 1; u <= n_; ++u)
      if (!seen[u] && adjacent(v, u)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n_;
}

SpinGraph SpinGraph::complement() const {
  SpinGraph g(n_);
  for (int mu = 1; mu <= n_; ++mu)
    for (int nu = mu + 1; nu <= n_; ++nu)
      if (!adjacent(mu, nu)) g.set_edge(mu, nu);
  return g;
}

std::optional<std::array<int, 4>> find_induced_4chain(const SpinGraph& g) {
  int n = g.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (b == a) continue;
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        for (int d = a + 1; d <= n; ++d) {  // a < d fixes the orientation
          if (d == b || d == c) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
              !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, d))
            return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

namespace {

// Connected components of verts under an arbitrary adjacency predicate,
// sorted by smallest contained vertex.
template <class Linked>
std::vector<std::vector<int>> components_by(const std::vector<int>& verts,
                                            Linked linked) {
  std::vector<std::vector<int>> comps;
  std::set<int> remaining(verts.begin(), verts.end());
  while (!remaining.empty()) {
    int start = *remaining.begin();
    std::vector<int> comp, stack = {start};
    remaining.erase(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (linked(v, *it)) {
          stack.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // BFS seeds were taken in ascending order, so comps are already sorted by
  // their smallest vertex.
  return comps;
}

std::vector<std::vector<int>> components_within(const SpinGraph& g,
                                                const std::vector<int>& verts,
                                                bool in_complement) {
  return components_by(verts, [&](int a, int b) {
    return g.adjacent(a, b) != in_complement;
  });
}

bool decompose_rec(const SpinGraph& g, const std::vector<int>& verts,
                   std::map<std::vector<int>, double>& jmap) {
  if (verts.size() == 1) {
    jmap[verts] = 0.0;
    return true;
  }
  auto comps = components_within(g, verts, false);
  if (comps.size() > 1) {
    // Split off the component with the smallest vertex; the rest splits
    // further on the next level if more components remain.
    jmap[verts] = 0.0;
    std::vector<int> rest;
    for (std::size_t i = 1; i < comps.size(); ++i)
      rest.insert(rest.end(), comps[i].begin(), comps[i].end());
    std::sort(rest.begin(), rest.end());
    return decompose_rec(g, comps[0], jmap) && decompose_rec(g, rest, jmap);
  }
  auto cc = components_within(g, verts, true);
  if (cc.size() == 1) return false;  // complement connected: induced 4-chain
  for (const auto& c : cc)
    if (!decompose_rec(g, c, jmap)) return false;
  // Left fold over complement components, joining with coupling 1.
  std::vector<int> acc = cc[0];
  for (std::size_t i = 1; i < cc.size(); ++i) {
    std::vector<int> next = acc;
    next.insert(next.end(), cc[i].begin(), cc[i].end());
    std::sort(next.begin(), next.end());
    jmap[next] = 1.0;
    acc = std::move(next);
  }
  return true;
}

}  // namespace

IntegrabilityVerdict decompose(const SpinGraph& g) {
  std::vector<int> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i + 1;

  std::map<std::vector<int>, double> jmap;
  IntegrabilityVerdict verdict;
  if (g.n() == 1) {
    verdict.integrable = true;
    verdict.system = BJSystem::make(PartitionTree::trivial(), {0.0});
    return verdict;
  }
  if (decompose_rec(g, all, jmap)) {
    std::vector<std::vector<int>> sets;
    for (const auto& [s, j] : jmap) sets.push_back(s);
    PartitionTree tree = PartitionTree::from_sets(g.n(), sets);
    std::vector<double> j(tree.node_count());
    for (int i = 0; i < tree.node_count(); ++i)
      j[i] = jmap.at(tree.node(i).members);
    verdict.integrable = true;
    verdict.system = BJSystem::make(std::move(tree), std::move(j));
  } else {
    verdict.integrable = false;
    verdict.chain = find_induced_4chain(g);
    if (!verdict.chain)
      throw std::logic_error("decomposition failed without an induced 4-chain");
  }
  return verdict;
}

namespace {

// Record the fold nodes for components joined at value c: right fold keeps
// the uniform-graph convention for c = 0 (smallest component against the
// rest), left fold the convention for nonzero values.
void record_fold(const std::vector<std::vector<int>>& comps, double c,
                 std::map<std::vector<int>, double>& jmap) {
  if (c == 0.0) {
    std::vector<int> acc = comps.back();
    for (std::size_t i = comps.size() - 1; i-- > 0;) {
      std::vector<int> next = comps[i];
      next.insert(next.end(), acc.begin(), acc.end());
      std::sort(next.begin(), next.end());
      jmap[next] = c;
      acc = std::move(next);
    }
  } else {
    std::vector<int> acc = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) {
      std::vector<int> next = acc;
      next.insert(next.end(), comps[i].begin(), comps[i].end());
      std::sort(next.begin(), next.end());
      jmap[next] = c;
      acc = std::move(next);
    }
  }
}

bool decompose_couplings_rec(const CouplingMatrix& j, const std::vector<int>& verts,
                             std::map<std::vector<int>, double>& jmap) {
  if (verts.size() == 1) {
    jmap[verts] = 0.0;
    return true;
  }
  std::set<double> values;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      values.insert(j.get(verts[a], verts[b]));
  for (double c : values) {
    auto comps = components_by(verts, [&](int u, int v) {
      return j.get(u, v) != c;
    });
    if (comps.size() < 2) continue;
    std::map<std::vector<int>, double> local;
    bool ok = true;
    for (const auto& comp : comps)
      if (!decompose_couplings_rec(j, comp, local)) {
        ok = false;
        break;
      }
    if (!ok) continue;  // try the next candidate value
    record_fold(comps, c, local);
    jmap.insert(local.begin(), local.end());
    return true;
  }
  return false;
}

}  // namespace

std::optional<BJSystem> decompose_couplings(const CouplingMatrix& j) {
  int n = j.n();
  if (n == 1) return BJSystem::make(PartitionTree::trivial(), {0.0});
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::map<std::vector<int>, double> jmap;
  if (!decompose_couplings_rec(j, all, jmap)) return std::nullopt;
  std::vector<std::vector<int>> sets;
  for (const auto& [s, val] : jmap) sets.push_back(s);
  PartitionTree tree = PartitionTree::from_sets(n, sets);
  std::vector<double> jv(tree.node_count());
  for (int i = 0; i < tree.node_count(); ++i)
    jv[i] = jmap.at(tree.node(i).members);
  return BJSystem::make(std::move(tree), std::move(jv));
}

namespace {

// Pair order (1,2),(1,3),(2,3),(1,4),(2,4),(3,4),...: all pairs with larger
// endpoint v listed before those with larger endpoint v+1.  Earlier pairs are
// packed more significant so word comparison is lexicographic on the bits.
int word_bits(int n) { return n * (n - 1) / 2; }

struct CanonSearch {
  const SpinGraph* g = nullptr;
  int n = 0, total = 0;
  std::uint64_t best = 0;
  std::vector<int> perm;   // perm[k] = original vertex at canonical label k+1
  std::vector<char> used;  // by original vertex

  void run(int pos, std::uint64_t word, int bits, bool tight) {
    if (pos == n) {
      if (word < best) best = word;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      std::uint64_t chunk = 0;
      for (int u = 0; u < pos; ++u)
        chunk = (chunk << 1) | (g->adjacent(perm[u], v) ? 1u : 0u);
      std::uint64_t next = (word << pos) | chunk;
      int next_bits = bits + pos;
      bool next_tight = tight;
      if (tight) {
        std::uint64_t best_prefix = best >> (total - next_bits);
        if (next > best_prefix) continue;  // worse than the incumbent
        next_tight = (next == best_prefix);
      }
      used[v] = 1;
      perm[pos] = v;
      run(pos + 1, next, next_bits, next_tight);
      used[v] = 0;
    }
  }
};

std::uint64_t identity_word(const SpinGraph& g) {
  std::uint64_t w = 0;
  for (int v = 2; v <= g.n(); ++v)
    for (int u = 1; u < v; ++u)
      w = (w << 1) | (g.adjacent(u, v) ? 1u : 0u);
  return w;
}

}  // namespace

std::uint64_t canonical_word(const SpinGraph& g) {
  if (g.n() == 1) return 0;
  CanonSearch s;
  s.g = &g;
  s.n = g.n();
  s.total = word_bits(g.n());
  s.best = identity_word(g);
  s.perm.assign(g.n(), 0);
  s.used.assign(g.n() + 1, 0);
  s.run(0, 0, 0, true);
  return s.best;
}

SpinGraph graph_from_word(int n, std::uint64_t word) {
  SpinGraph g(n);
  int bit = word_bits(n);
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u) {
      --bit;
      if ((word >> bit) & 1u) g.set_edge(u, v);
    }
  return g;
}

std::vector<SpinGraph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected-graph enumeration supports 1..7 vertices");
  // Grow representatives one vertex at a time: every connected graph has a
  // vertex whose removal keeps it connected, so attaching a new vertex to a
  // smaller representative with every non-empty neighborhood covers all
  // classes; canonical words deduplicate.
  std::set<std::uint64_t> words = {0};  // the single-vertex graph
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> grown;
    for (std::uint64_t w : words) {
      SpinGraph base = graph_from_word(k - 1, w);
      for (std::uint64_t nb = 1; nb < (1ull << (k - 1)); ++nb) {
        SpinGraph g(k);
        for (auto [a, b] : base.edges()) g.set_edge(a, b);
        for (int u = 1; u < k; ++u)
          if ((nb >> (u - 1)) & 1u) g.set_edge(u, k);
        grown.insert(canonical_word(g));
      }
    }
    words = std::move(grown);
  }
  std::vector<SpinGraph> out;
  out.reserve(words.size());
  for (std::uint64_t w : words) out.push_back(graph_from_word(n, w));
  return out;
}

}  // namespace spintree
