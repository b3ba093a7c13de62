#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tonnetz/incidence.hpp"

namespace tonnetz {

/// Certificate for a vertex-colored graph. Two graphs have equal
/// certificates exactly when a color-preserving isomorphism exists: the
/// certificate is the adjacency matrix (plus colors) under a canonical
/// labeling, so equality is an isomorphism by construction.
struct CanonicalForm {
  std::vector<std::uint8_t> certificate;
  /// canonical_rank[v] = position of vertex v in the canonical order.
  std::vector<int> canonical_rank;

  bool operator==(const CanonicalForm& other) const {
    return certificate == other.certificate;
  }
};

/// Color refinement with backtracking individualization. colors gives the
/// initial vertex classes (for Levi graphs: 0 white, 1 black).
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors);

/// Color-preserving isomorphism g1 -> g2, as mapping[v1] = v2.
std::optional<std::vector<int>> find_color_isomorphism(const Graph& g1,
                                                       const std::vector<int>& colors1,
                                                       const Graph& g2,
                                                       const std::vector<int>& colors2);

/// Checks that mapping is a bijection carrying edges to edges exactly.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping);

struct LeviIsomorphism {
  std::vector<int> mapping;  // vertex of g1 -> vertex of g2
  bool swaps_sides = false;  // true when points map to blocks
};

/// Isomorphism test between Levi graphs. With respect_colors, points must
/// map to points; without, the side-swapped matching is also tried, which
/// is how dualities surface.
std::optional<LeviIsomorphism> are_isomorphic(const LeviGraph& g1, const LeviGraph& g2,
                                              bool respect_colors);

/// s is self-dual when its Levi graph admits a side-swapping automorphism.
bool is_self_dual(const IncidenceStructure& s);

}  // namespace tonnetz
