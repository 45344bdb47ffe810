#include "ppr/graph.hpp"

#include <numeric>
#include <queue>
#include <sstream>

namespace ppr {
namespace {

// Kuhn augmenting-path step: try to match row u within the k-by-k
// adjacency restricted to a support.
bool try_augment(int u, const std::vector<std::vector<bool>>& adj, std::vector<bool>& visited,
                 std::vector<int>& match_col) {
  const int k = static_cast<int>(adj.size());
  for (int v = 0; v < k; ++v) {
    if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
        visited[static_cast<std::size_t>(v)])
      continue;
    visited[static_cast<std::size_t>(v)] = true;
    if (match_col[static_cast<std::size_t>(v)] < 0 ||
        try_augment(match_col[static_cast<std::size_t>(v)], adj, visited, match_col)) {
      match_col[static_cast<std::size_t>(v)] = u;
      return true;
    }
  }
  return false;
}

// Perfect row/column matching on the induced pattern; returns column ->
// row assignments or empty when no cycle cover exists.
std::vector<int> cycle_cover_on(const Digraph& g, const std::vector<int>& support) {
  const int k = static_cast<int>(support.size());
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(k),
                                     std::vector<bool>(static_cast<std::size_t>(k), false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          g.has_arc(support[static_cast<std::size_t>(i)], support[static_cast<std::size_t>(j)]);
  std::vector<int> match_col(static_cast<std::size_t>(k), -1);
  for (int u = 0; u < k; ++u) {
    std::vector<bool> visited(static_cast<std::size_t>(k), false);
    if (!try_augment(u, adj, visited, match_col)) return {};
  }
  return match_col;
}

}  // namespace

Digraph::Digraph(int vertex_count) : n_(vertex_count) {
  if (n_ < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
}

void Digraph::add_arc(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw std::invalid_argument("Digraph: endpoint out of range");
  arcs_.emplace(u, v);
}

void Digraph::add_edge(int u, int v) {
  add_arc(u, v);
  add_arc(v, u);
}

bool Digraph::has_arc(int u, int v) const { return arcs_.contains({u, v}); }

Digraph from_pattern(const IntMatrix& b) {
  if (!is_zero_one(b)) throw std::invalid_argument("from_pattern: matrix is not a (0,1)-matrix");
  Digraph g(static_cast<int>(b.rows()));
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (b(i, j) == 1) g.add_arc(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return g;
}

IntMatrix to_pattern(const Digraph& g) {
  const int n = g.vertex_count();
  IntMatrix b = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.arcs()) b(u - 1, v - 1) = 1;
  return b;
}

bool is_symmetric(const Digraph& g) {
  for (const auto& [u, v] : g.arcs())
    if (!g.has_arc(v, u)) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // returns false if already joined (a cycle)
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Undirected edge list of a symmetric loop-free graph, each pair once.
std::vector<std::pair<int, int>> undirected_edges(const Digraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.arcs())
    if (u < v) edges.emplace_back(u, v);
  return edges;
}

bool has_loop(const Digraph& g) {
  for (const auto& [u, v] : g.arcs())
    if (u == v) return true;
  return false;
}

}  // namespace

bool is_forest(const Digraph& g) {
  if (!is_symmetric(g) || has_loop(g)) return false;
  UnionFind uf(g.vertex_count());
  for (const auto& [u, v] : undirected_edges(g))
    if (!uf.join(u - 1, v - 1)) return false;
  return true;
}

bool is_tree(const Digraph& g) {
  const int n = g.vertex_count();
  return is_forest(g) &&
         static_cast<int>(undirected_edges(g).size()) == n - 1;
}

int max_matching_tree(const Digraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("max_matching_tree: input is not a forest");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n + 1));
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [u, v] : undirected_edges(g)) {
    adjacent[static_cast<std::size_t>(u)].push_back(v);
    adjacent[static_cast<std::size_t>(v)].push_back(u);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<bool> alive(static_cast<std::size_t>(n + 1), true);
  std::queue<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);

  int matched = 0;
  auto remove = [&](int v) {
    alive[static_cast<std::size_t>(v)] = false;
    for (int w : adjacent[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      if (--degree[static_cast<std::size_t>(w)] == 1) leaves.push(w);
    }
  };
  while (!leaves.empty()) {
    const int leaf = leaves.front();
    leaves.pop();
    if (!alive[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) continue;
    int partner = 0;
    for (int w : adjacent[static_cast<std::size_t>(leaf)])
      if (alive[static_cast<std::size_t>(w)]) partner = w;
    remove(leaf);
    remove(partner);
    ++matched;
  }
  return matched;
}

std::optional<GeneralizedCycle> find_generalized_cycle(const Digraph& g, int k) {
  if (k < 1 || k > g.vertex_count())
    throw std::invalid_argument("find_generalized_cycle: k out of range");
  std::optional<GeneralizedCycle> found;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& support) {
    const std::vector<int> match_col = cycle_cover_on(g, support);
    if (match_col.empty()) return false;
    GeneralizedCycle cycle;
    cycle.support = support;
    for (int col = 0; col < k; ++col)
      cycle.successor[support[static_cast<std::size_t>(match_col[static_cast<std::size_t>(col)])]] =
          support[static_cast<std::size_t>(col)];
    found = std::move(cycle);
    return true;
  });
  return found;
}

bool is_valid_generalized_cycle(const Digraph& g, const GeneralizedCycle& c) {
  std::set<int> support(c.support.begin(), c.support.end());
  if (support.size() != c.support.size() || c.successor.size() != support.size()) return false;
  std::set<int> images;
  for (const auto& [v, w] : c.successor) {
    if (!support.contains(v) || !support.contains(w)) return false;
    if (!g.has_arc(v, w)) return false;
    images.insert(w);
  }
  return images.size() == support.size();
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  const bool undirected = is_symmetric(g);
  out << (undirected ? "graph" : "digraph") << " G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.arcs()) {
    if (undirected && u > v) continue;  // collapse symmetric pairs
    out << "  " << u << (undirected ? " -- " : " -> ") << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ppr
