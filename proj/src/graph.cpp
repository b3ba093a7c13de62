#include "tonnetz/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace tonnetz {

Graph::Graph(int n) {
  if (n < 0) fail("graph: negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    fail("graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail("graph: self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    fail("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[static_cast<std::size_t>(u)], v);
  insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge seen at depths d(u), d(v) closes a
  // cycle of length d(u)+d(v)+1. The minimum over all roots is exact.
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] == -1) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          q.push(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  const auto k = cycle.size();
  if (k < 3) fail("cycle: fewer than three vertices");
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  auto at = [&](std::size_t offset) {
    return cycle[(static_cast<std::size_t>(min_it - cycle.begin()) + offset) % k];
  };
  std::vector<int> forward(k), backward(k);
  for (std::size_t i = 0; i < k; ++i) {
    forward[i] = at(i);
    backward[i] = at((k - i) % k);
  }
  return std::min(forward, backward);
}

Graph graph_from_lcf(const std::vector<int>& shifts, int repeats) {
  if (shifts.empty() || repeats <= 0) fail("lcf: empty description");
  const int n = static_cast<int>(shifts.size()) * repeats;
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int shift = shifts[static_cast<std::size_t>(i) % shifts.size()];
    int j = ((i + shift) % n + n) % n;
    if (i < j) g.add_edge(i, j);
  }
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      fail("induced subgraph: vertex " + std::to_string(v) + " out of range");
    if (position[static_cast<std::size_t>(v)] != -1)
      fail("induced subgraph: vertex " + std::to_string(v) + " listed twice");
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(vertices.size()));
  for (auto [u, v] : g.edges()) {
    int pu = position[static_cast<std::size_t>(u)];
    int pv = position[static_cast<std::size_t>(v)];
    if (pu != -1 && pv != -1) out.add_edge(pu, pv);
  }
  return out;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) fail("relabel: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      fail("relabel: not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
  Graph out(n);
  for (auto [u, v] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace tonnetz
