#ifndef PPR_GRAPH_HPP
#define PPR_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppr/matrix.hpp"

namespace ppr {

/// Directed graph with loops on vertices 1..n. Arcs are a set, so there
/// are no multi-edges; undirected edges are stored as symmetric arc pairs.
class Digraph {
 public:
  explicit Digraph(int vertex_count);

  int vertex_count() const { return n_; }
  const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

  void add_arc(int u, int v);
  /// Adds both (u,v) and (v,u).
  void add_edge(int u, int v);
  bool has_arc(int u, int v) const;

  bool operator==(const Digraph& other) const = default;

 private:
  int n_;
  std::set<std::pair<int, int>> arcs_;
};

/// A permutation on a vertex subset whose functional arcs all exist in the
/// ambient graph; witnesses a nonzero principal permanent of the pattern.
struct GeneralizedCycle {
  std::vector<int> support;        // sorted vertex subset
  std::map<int, int> successor;    // bijection on support
};

/// Graph whose adjacency matrix is the given (0,1) pattern.
Digraph from_pattern(const IntMatrix& b);

/// Adjacency (0,1) matrix; inverse of from_pattern.
IntMatrix to_pattern(const Digraph& g);

bool is_symmetric(const Digraph& g);

/// Symmetric, loop-free, connected, exactly n-1 undirected edges.
bool is_tree(const Digraph& g);

/// Symmetric, loop-free, acyclic (components need not be connected).
bool is_forest(const Digraph& g);

/// Maximum matching size mu(G) of a forest by iterated leaf matching.
/// Throws std::invalid_argument when the input is not a forest.
int max_matching_tree(const Digraph& g);

/// First generalized cycle of order k, searching supports in lexicographic
/// order; the cycle cover on a support is found by bipartite augmenting
/// paths, so no permanents are involved.
std::optional<GeneralizedCycle> find_generalized_cycle(const Digraph& g, int k);

/// Checks the GeneralizedCycle invariants against its ambient graph.
bool is_valid_generalized_cycle(const Digraph& g, const GeneralizedCycle& c);

/// DOT output; symmetric graphs are emitted as an undirected graph with
/// each edge collapsed to a single line.
std::string to_dot(const Digraph& g);

}  // namespace ppr

#endif  // PPR_GRAPH_HPP
