#include "tonnetz/progression.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>

#include "tonnetz/errors.hpp"
#include "tonnetz/graph.hpp"

namespace tonnetz {

std::vector<std::pair<std::string, std::string>> ProgressionChart::discontinuities() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& step : steps) {
    if (step.pivots.empty()) out.emplace_back(step.from, step.to);
  }
  return out;
}

std::string ProgressionChart::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    out << step.from << " -> " << step.to << ": ";
    if (step.pivots.empty()) {
      out << "no shared tone";
    } else {
      for (std::size_t k = 0; k < step.pivots.size(); ++k) {
        if (k > 0) out << ", ";
        out << step.pivots[k];
      }
    }
    out << '\n';
  }
  out << (continuous ? "continuous" : "discontinuous") << '\n';
  return out.str();
}

ProgressionChart chart_progression(const IncidenceStructure& s,
                                   const std::vector<std::string>& chords) {
  if (chords.size() < 2) fail("a progression needs at least two chords");
  std::vector<int> blocks;
  blocks.reserve(chords.size());
  for (const auto& label : chords) {
    auto index = s.block_index(label);
    if (!index) fail("unknown chord label " + label);
    blocks.push_back(*index);
  }

  ProgressionChart chart;
  chart.chords = chords;
  chart.continuous = true;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    const auto& a = s.block(blocks[i]).points;
    const auto& b = s.block(blocks[i + 1]).points;
    std::vector<int> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(shared));
    ProgressionStep step;
    step.from = chords[i];
    step.to = chords[i + 1];
    for (int p : shared) step.pivots.push_back(s.point_label(p));
    if (step.pivots.empty()) chart.continuous = false;
    chart.steps.push_back(std::move(step));
  }
  return chart;
}

std::string Trajectory::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) out << " - ";
    out << walk[i];
  }
  out << "  (length " << length << ", " << (unique ? "unique" : "not unique")
      << ")";
  return out.str();
}

namespace {

/// Distances from `root` to every vertex, -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int root) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Trajectory minimal_trajectory(const LeviGraph& g,
                              const std::vector<std::string>& chords) {
  if (chords.size() < 2) fail("a trajectory needs at least two chords");
  std::vector<int> stops;
  stops.reserve(chords.size());
  for (const auto& label : chords) {
    auto vertex = g.vertex_by_label(label);
    if (!vertex) fail("unknown vertex label " + label);
    stops.push_back(*vertex);
  }

  Trajectory result;
  result.unique = true;
  result.walk.push_back(g.labels[stops.front()]);
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    int from = stops[i];
    int to = stops[i + 1];
    // Distances toward the target let the walk step greedily: any neighbor
    // one step closer extends a shortest path.
    std::vector<int> dist = bfs_distances(g.graph, to);
    if (dist[from] < 0) {
      fail("no path from " + g.labels[from] + " to " + g.labels[to]);
    }
    result.length += dist[from];

    // Count shortest paths from every vertex to the target. Vertices are
    // processed by increasing distance, so predecessors are ready.
    std::vector<int> order(g.graph.vertex_count());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(),
              [&dist](int a, int b) { return dist[a] < dist[b]; });
    std::vector<std::uint64_t> ways(g.graph.vertex_count(), 0);
    ways[to] = 1;
    for (int v : order) {
      if (v == to || dist[v] < 0) continue;
      for (int w : g.graph.neighbors(v)) {
        if (dist[w] == dist[v] - 1) ways[v] += ways[w];
      }
    }
    if (ways[from] != 1) result.unique = false;

    // The reported walk always takes the smallest eligible vertex.
    int v = from;
    while (v != to) {
      int next = -1;
      for (int w : g.graph.neighbors(v)) {
        if (dist[w] == dist[v] - 1) {
          next = w;
          break;
        }
      }
      result.walk.push_back(g.labels[next]);
      v = next;
    }
  }
  return result;
}

}  // namespace tonnetz
