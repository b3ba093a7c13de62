#include "tonnetz/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace tonnetz {
namespace {

// Iterated neighborhood refinement. Colors are re-indexed after each round
// by sorted signature, so the partition is independent of vertex order in
// the sense required for canonical search (signatures use color values,
// never vertex ids).
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      around.reserve(g.neighbors(v).size());
      for (int u : g.neighbors(v)) around.push_back(colors[static_cast<std::size_t>(u)]);
      std::sort(around.begin(), around.end());
      signature[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)],
                                                std::move(around)};
    }
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (const auto& sig : signature) index.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : index) id = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int fresh = index[signature[static_cast<std::size_t>(v)]];
      if (fresh != colors[static_cast<std::size_t>(v)]) changed = true;
      colors[static_cast<std::size_t>(v)] = fresh;
    }
    if (!changed) return colors;
  }
}

// First color class of size >= 2, by color id. Color ids are canonical
// after refinement, so this target choice is isomorphism-invariant.
std::optional<int> target_cell(const std::vector<int>& colors) {
  std::map<int, int> size;
  for (int c : colors) ++size[c];
  for (const auto& [c, count] : size)
    if (count >= 2) return c;
  return std::nullopt;
}

std::vector<std::uint8_t> certificate_bytes(const Graph& g,
                                            const std::vector<int>& initial_colors,
                                            const std::vector<int>& rank) {
  const int n = g.vertex_count();
  std::vector<int> vertex_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertex_at[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n & 0xff));
  bytes.push_back(static_cast<std::uint8_t>((n >> 8) & 0xff));
  for (int i = 0; i < n; ++i) {
    int c = initial_colors[static_cast<std::size_t>(vertex_at[static_cast<std::size_t>(i)])];
    bytes.push_back(static_cast<std::uint8_t>(c & 0xff));
    bytes.push_back(static_cast<std::uint8_t>((c >> 8) & 0xff));
  }
  std::uint8_t acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>(
          (acc << 1) | (g.has_edge(vertex_at[static_cast<std::size_t>(i)],
                                   vertex_at[static_cast<std::size_t>(j)])
                            ? 1
                            : 0));
      if (++filled == 8) {
        bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return bytes;
}

struct Search {
  const Graph& g;
  const std::vector<int>& initial_colors;
  std::optional<std::vector<std::uint8_t>> best;
  std::vector<int> best_rank;

  void descend(std::vector<int> colors) {
    colors = refine(g, colors);
    auto cell = target_cell(colors);
    if (!cell) {
      // Discrete partition: color id is the canonical rank.
      auto bytes = certificate_bytes(g, initial_colors, colors);
      if (!best || bytes < *best) {
        best = std::move(bytes);
        best_rank = colors;
      }
      return;
    }
    int fresh = static_cast<int>(colors.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (colors[static_cast<std::size_t>(v)] != *cell) continue;
      auto branch = colors;
      branch[static_cast<std::size_t>(v)] = fresh;
      descend(std::move(branch));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count())
    fail("canonical: color vector size mismatch");
  Search search{g, colors, std::nullopt, {}};
  search.descend(colors);
  return CanonicalForm{std::move(*search.best), std::move(search.best_rank)};
}

std::optional<std::vector<int>> find_color_isomorphism(const Graph& g1,
                                                       const std::vector<int>& colors1,
                                                       const Graph& g2,
                                                       const std::vector<int>& colors2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  auto sorted1 = colors1, sorted2 = colors2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return std::nullopt;

  auto form1 = canonical_form(g1, colors1);
  auto form2 = canonical_form(g2, colors2);
  if (!(form1 == form2)) return std::nullopt;

  const int n = g1.vertex_count();
  std::vector<int> inverse2(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    inverse2[static_cast<std::size_t>(form2.canonical_rank[static_cast<std::size_t>(v)])] = v;
  std::vector<int> mapping(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    mapping[static_cast<std::size_t>(v)] =
        inverse2[static_cast<std::size_t>(form1.canonical_rank[static_cast<std::size_t>(v)])];
  if (!is_isomorphism(g1, g2, mapping)) fail("canonical: certificate mismatch");
  return mapping;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || static_cast<int>(mapping.size()) != n) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int v : mapping) {
    if (v < 0 || v >= n || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = true;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.has_edge(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

namespace {

std::vector<int> side_colors(const LeviGraph& g, bool swapped) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    colors[static_cast<std::size_t>(v)] = (g.is_white(v) != swapped) ? 0 : 1;
  return colors;
}

}  // namespace

std::optional<LeviIsomorphism> are_isomorphic(const LeviGraph& g1, const LeviGraph& g2,
                                              bool respect_colors) {
  auto direct = find_color_isomorphism(g1.graph, side_colors(g1, false), g2.graph,
                                       side_colors(g2, false));
  if (direct) return LeviIsomorphism{std::move(*direct), false};
  if (respect_colors) return std::nullopt;
  auto swapped = find_color_isomorphism(g1.graph, side_colors(g1, false), g2.graph,
                                        side_colors(g2, true));
  if (swapped) return LeviIsomorphism{std::move(*swapped), true};
  return std::nullopt;
}

bool is_self_dual(const IncidenceStructure& s) {
  auto levi = levi_from_incidence(s);
  auto dual_levi = levi_from_incidence(dual(s));
  return are_isomorphic(levi, dual_levi, true).has_value();
}

}  // namespace tonnetz
