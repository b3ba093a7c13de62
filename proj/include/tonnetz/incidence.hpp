#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonnetz/graph.hpp"

namespace tonnetz {

/// A block is a set of points, stored as sorted point indices.
struct Block {
  std::string label;
  std::vector<int> points;
};

/// Finite incidence structure: labeled points and labeled blocks of points.
/// Construction validates label uniqueness, index ranges, and that no two
/// blocks carry the same point set.
class IncidenceStructure {
 public:
  IncidenceStructure(std::string name, std::vector<std::string> point_labels,
                     std::vector<Block> blocks);

  const std::string& name() const { return name_; }
  int point_count() const { return static_cast<int>(point_labels_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::string>& point_labels() const { return point_labels_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::string& point_label(int p) const;
  const Block& block(int b) const;

  std::optional<int> point_index(std::string_view label) const;
  std::optional<int> block_index(std::string_view label) const;
  bool point_in_block(int p, int b) const;
  std::vector<int> blocks_of_point(int p) const;

  /// Structural equality: same labeled points, same labeled point sets,
  /// regardless of storage order. Names are not compared.
  bool same_up_to_order(const IncidenceStructure& other) const;

 private:
  std::string name_;
  std::vector<std::string> point_labels_;
  std::vector<Block> blocks_;
};

/// Bipartite incidence graph. Vertices 0..white_count-1 are the points
/// (white), the rest are the blocks (black), in structure order.
struct LeviGraph {
  std::vector<std::string> labels;
  int white_count = 0;
  Graph graph;

  int vertex_count() const { return graph.vertex_count(); }
  int black_count() const { return vertex_count() - white_count; }
  bool is_white(int v) const { return v < white_count; }
  const std::string& label(int v) const { return labels[static_cast<std::size_t>(v)]; }
  std::optional<int> vertex_by_label(std::string_view label) const;
  std::vector<std::string> labels_of(const std::vector<int>& vertices) const;
};

LeviGraph levi_from_incidence(const IncidenceStructure& s);

/// Inverse of levi_from_incidence; whites become points.
IncidenceStructure incidence_from_levi(const LeviGraph& g, std::string name);

/// Degree report for the two sides of a Levi graph. blocks_per_point and
/// points_per_block are absent when the respective side is not regular.
struct BiregularityReport {
  int points = 0;
  int blocks = 0;
  std::optional<int> blocks_per_point;
  std::optional<int> points_per_block;
  bool is_biregular = false;
  bool is_square = false;

  /// "{7_3}" style tag for square biregular graphs, "{m x n}" otherwise.
  std::string type_tag() const;
};

BiregularityReport biregularity(const LeviGraph& g);

/// Combinatorial configuration test: biregular, square, girth at least six
/// (an acyclic Levi graph passes the girth clause).
bool is_configuration(const LeviGraph& g);

/// Points and blocks exchange roles; labels are preserved.
IncidenceStructure dual(const IncidenceStructure& s);

/// All 4-cycles of a Levi graph, each reported once as
/// (white, black, white, black) in canonical rotation.
struct TetracycleReport {
  long count = 0;
  std::vector<std::array<int, 4>> cycles;
};

TetracycleReport count_tetracycles(const LeviGraph& g);

}  // namespace tonnetz
