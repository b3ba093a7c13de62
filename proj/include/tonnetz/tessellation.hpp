#pragma once

#include <array>
#include <string>
#include <vector>

#include "tonnetz/incidence.hpp"

namespace tonnetz {

/// How a structure is spread over the hexagonal plane. Bipartite patches
/// put both vertex classes on the grid itself: triad strips interleave
/// degree and pitch hexagons, seventh strips label the borders between
/// degree hexagons with the shared tone. Face-centered patches put one
/// entity in each hexagon and both incident classes on its corners.
enum class TessellationFlavor { bipartite, face_centered };

/// Directions to the six neighbors of a hexagon, in the fixed cyclic
/// order east, northeast, northwest, west, southwest, southeast (axial
/// steps (+1,0), (+1,-1), (0,-1), (-1,0), (-1,+1), (0,+1)).
inline constexpr std::array<std::pair<int, int>, 6> kHexDirections = {
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

struct HexCell {
  int q = 0;
  int r = 0;
  std::string label;
  /// Neighbor cell labels by direction, from the infinite translation
  /// rule; slots are filled even when the neighbor lies outside the patch.
  std::array<std::string, 6> neighbors;
  /// Corner labels for face-centered patches, cyclic: the edge toward
  /// direction k joins corners k and k+1 (mod 6), so corner k is shared
  /// by the edges toward directions k-1 and k. Empty otherwise.
  std::array<std::string, 6> corners;
  /// Border labels for seventh strips: the tone shared with the neighbor
  /// in each direction. Empty otherwise.
  std::array<std::string, 6> borders;
};

struct TessellationPatch {
  std::string structure;
  TessellationFlavor flavor = TessellationFlavor::bipartite;
  int rows = 0;
  int cols = 0;
  /// Row-major: r runs 0..rows-1 outside, q runs 0..cols-1 inside.
  std::vector<HexCell> cells;
};

/// Lays a finite window of the structure's hexagonal tiling. Supported
/// pairs: diatonic triad and seventh structures with the bipartite
/// flavor, and the fused-triad and pitch-to-triad structures with the
/// face-centered flavor. Anything else is rejected by name.
TessellationPatch tessellation_patch(const IncidenceStructure& t, int rows, int cols,
                                     TessellationFlavor flavor);

}  // namespace tonnetz
