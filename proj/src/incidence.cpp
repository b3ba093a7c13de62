#include "tonnetz/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tonnetz {

IncidenceStructure::IncidenceStructure(std::string name,
                                       std::vector<std::string> point_labels,
                                       std::vector<Block> blocks)
    : name_(std::move(name)),
      point_labels_(std::move(point_labels)),
      blocks_(std::move(blocks)) {
  std::set<std::string> seen_points;
  for (const auto& label : point_labels_) {
    if (label.empty()) fail("incidence: empty point label");
    if (!seen_points.insert(label).second)
      fail("incidence: duplicate point label \"" + label + "\"");
  }
  std::set<std::string> seen_blocks;
  std::map<std::vector<int>, std::string> seen_sets;
  for (auto& block : blocks_) {
    if (block.label.empty()) fail("incidence: empty block label");
    if (!seen_blocks.insert(block.label).second)
      fail("incidence: duplicate block label \"" + block.label + "\"");
    std::sort(block.points.begin(), block.points.end());
    for (std::size_t i = 0; i < block.points.size(); ++i) {
      int p = block.points[i];
      if (p < 0 || p >= point_count())
        fail("incidence: block \"" + block.label + "\" has point index " +
             std::to_string(p) + " out of range");
      if (i > 0 && block.points[i - 1] == p)
        fail("incidence: block \"" + block.label + "\" repeats point \"" +
             point_labels_[static_cast<std::size_t>(p)] + "\"");
    }
    auto [it, fresh] = seen_sets.emplace(block.points, block.label);
    if (!fresh)
      fail("incidence: blocks \"" + it->second + "\" and \"" + block.label +
           "\" carry the same point set");
  }
}

const std::string& IncidenceStructure::point_label(int p) const {
  if (p < 0 || p >= point_count()) fail("incidence: point index out of range");
  return point_labels_[static_cast<std::size_t>(p)];
}

const Block& IncidenceStructure::block(int b) const {
  if (b < 0 || b >= block_count()) fail("incidence: block index out of range");
  return blocks_[static_cast<std::size_t>(b)];
}

std::optional<int> IncidenceStructure::point_index(std::string_view label) const {
  for (int p = 0; p < point_count(); ++p)
    if (point_labels_[static_cast<std::size_t>(p)] == label) return p;
  return std::nullopt;
}

std::optional<int> IncidenceStructure::block_index(std::string_view label) const {
  for (int b = 0; b < block_count(); ++b)
    if (blocks_[static_cast<std::size_t>(b)].label == label) return b;
  return std::nullopt;
}

bool IncidenceStructure::point_in_block(int p, int b) const {
  const auto& pts = block(b).points;
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::vector<int> IncidenceStructure::blocks_of_point(int p) const {
  if (p < 0 || p >= point_count()) fail("incidence: point index out of range");
  std::vector<int> out;
  for (int b = 0; b < block_count(); ++b)
    if (point_in_block(p, b)) out.push_back(b);
  return out;
}

bool IncidenceStructure::same_up_to_order(const IncidenceStructure& other) const {
  if (point_count() != other.point_count() || block_count() != other.block_count())
    return false;
  std::set<std::string> mine(point_labels_.begin(), point_labels_.end());
  std::set<std::string> theirs(other.point_labels_.begin(), other.point_labels_.end());
  if (mine != theirs) return false;
  auto normalized = [](const IncidenceStructure& s) {
    std::set<std::pair<std::string, std::set<std::string>>> out;
    for (const auto& block : s.blocks()) {
      std::set<std::string> pts;
      for (int p : block.points) pts.insert(s.point_label(p));
      out.emplace(block.label, std::move(pts));
    }
    return out;
  };
  return normalized(*this) == normalized(other);
}

LeviGraph levi_from_incidence(const IncidenceStructure& s) {
  LeviGraph g;
  g.white_count = s.point_count();
  g.labels = s.point_labels();
  for (const auto& block : s.blocks()) g.labels.push_back(block.label);
  g.graph = Graph(s.point_count() + s.block_count());
  for (int b = 0; b < s.block_count(); ++b)
    for (int p : s.block(b).points) g.graph.add_edge(p, s.point_count() + b);
  return g;
}

IncidenceStructure incidence_from_levi(const LeviGraph& g, std::string name) {
  std::vector<std::string> points(g.labels.begin(), g.labels.begin() + g.white_count);
  std::vector<Block> blocks;
  for (int v = g.white_count; v < g.vertex_count(); ++v) {
    Block block;
    block.label = g.label(v);
    for (int u : g.graph.neighbors(v)) {
      if (!g.is_white(u)) fail("levi: black-black edge, not an incidence graph");
      block.points.push_back(u);
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceStructure(std::move(name), std::move(points), std::move(blocks));
}

std::optional<int> LeviGraph::vertex_by_label(std::string_view label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels[static_cast<std::size_t>(v)] == label) return v;
  return std::nullopt;
}

std::vector<std::string> LeviGraph::labels_of(const std::vector<int>& vertices) const {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (int v : vertices) out.push_back(label(v));
  return out;
}

std::string BiregularityReport::type_tag() const {
  if (is_biregular && is_square)
    return "{" + std::to_string(points) + "_" + std::to_string(points_per_block.value_or(0)) + "}";
  return "{" + std::to_string(points) + " x " + std::to_string(blocks) + "}";
}

BiregularityReport biregularity(const LeviGraph& g) {
  BiregularityReport report;
  report.points = g.white_count;
  report.blocks = g.black_count();
  bool white_regular = true, black_regular = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.graph.degree(v);
    auto& slot = g.is_white(v) ? report.blocks_per_point : report.points_per_block;
    auto& flag = g.is_white(v) ? white_regular : black_regular;
    if (!slot)
      slot = d;
    else if (*slot != d)
      flag = false;
  }
  if (!white_regular) report.blocks_per_point.reset();
  if (!black_regular) report.points_per_block.reset();
  report.is_biregular = white_regular && black_regular;
  report.is_square = report.points == report.blocks &&
                     report.blocks_per_point == report.points_per_block;
  return report;
}

bool is_configuration(const LeviGraph& g) {
  auto report = biregularity(g);
  if (!report.is_biregular || !report.is_square) return false;
  auto shortest = girth(g.graph);
  return !shortest.has_value() || *shortest >= 6;
}

IncidenceStructure dual(const IncidenceStructure& s) {
  std::vector<std::string> points;
  points.reserve(static_cast<std::size_t>(s.block_count()));
  for (const auto& block : s.blocks()) points.push_back(block.label);
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(s.point_count()));
  for (int p = 0; p < s.point_count(); ++p)
    blocks.push_back(Block{s.point_label(p), s.blocks_of_point(p)});
  return IncidenceStructure(s.name() + " (dual)", std::move(points), std::move(blocks));
}

TetracycleReport count_tetracycles(const LeviGraph& g) {
  TetracycleReport report;
  // A 4-cycle is a pair of whites with two common black neighbors.
  for (int w1 = 0; w1 < g.white_count; ++w1) {
    for (int w2 = w1 + 1; w2 < g.white_count; ++w2) {
      std::vector<int> common;
      const auto& n1 = g.graph.neighbors(w1);
      const auto& n2 = g.graph.neighbors(w2);
      std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          // Whites precede blacks, so w1 leads and the smaller black follows.
          report.cycles.push_back({w1, common[i], w2, common[j]});
          ++report.count;
        }
    }
  }
  std::sort(report.cycles.begin(), report.cycles.end());
  return report;
}

}  // namespace tonnetz
