#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tonnetz/errors.hpp"

namespace tonnetz {

/// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
/// Adjacency lists are kept sorted so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Length of a shortest cycle, or nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

/// Two-coloring with color 0 on the smallest vertex of each component.
/// nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Canonical form of a cycle's vertex sequence: rotated so the smallest
/// vertex leads, reflected so the second entry is the smaller neighbor.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

/// Cubic (and similar) circulant-style graphs from LCF notation: an n-cycle
/// 0..n-1 plus chords (i, i + shifts[i mod shifts.size()]).
Graph graph_from_lcf(const std::vector<int>& shifts, int repeats);

/// Copy of g with vertex v renamed to perm[v].
Graph relabeled(const Graph& g, const std::vector<int>& perm);

/// Subgraph on the given vertices, renumbered 0..k-1 in list order.
/// The vertex list must not contain repeats.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace tonnetz
