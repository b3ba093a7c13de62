#include "tonnetz/tessellation.hpp"

#include <algorithm>
#include <functional>

#include "tonnetz/errors.hpp"
#include "tonnetz/music.hpp"

namespace tonnetz {

namespace {

int positive_mod(int value, int modulus) {
  int m = value % modulus;
  return m < 0 ? m + modulus : m;
}

/// Degree indices in ascending fourths: 0, 3, 6, 2, 5, 1, 4.
constexpr std::array<int, 7> kFourthChain = {0, 3, 6, 2, 5, 1, 4};
/// Degree indices in descending thirds: 0, 5, 3, 1, 6, 4, 2.
constexpr std::array<int, 7> kThirdChain = {0, 5, 3, 1, 6, 4, 2};

/// Triad strips interleave a degree hexagon with the pitch hexagon of its
/// root, walking the fourth chain left to right. Moving one row down
/// shifts by seven tokens, so every degree is ringed by its three tones.
TessellationPatch triad_strip(const IncidenceStructure& t, int rows, int cols) {
  if (t.point_count() != 7 || t.block_count() != 7) {
    fail("triad strips need seven points and seven blocks");
  }
  std::array<std::string, 14> sequence;
  for (int j = 0; j < 7; ++j) {
    sequence[2 * j] = t.block(kFourthChain[j]).label;
    sequence[2 * j + 1] = t.point_label(kFourthChain[j]);
  }

  TessellationPatch patch;
  patch.structure = t.name();
  patch.flavor = TessellationFlavor::bipartite;
  patch.rows = rows;
  patch.cols = cols;
  for (int r = 0; r < rows; ++r) {
    for (int q = 0; q < cols; ++q) {
      HexCell cell;
      cell.q = q;
      cell.r = r;
      int index = positive_mod(q + 7 * r, 14);
      cell.label = sequence[index];
      for (std::size_t d = 0; d < kHexDirections.size(); ++d) {
        int step = kHexDirections[d].first + 7 * kHexDirections[d].second;
        cell.neighbors[d] = sequence[positive_mod(index + step, 14)];
      }
      patch.cells.push_back(std::move(cell));
    }
  }
  return patch;
}

/// Seventh strips tile with degree hexagons alone, walking the third
/// chain left to right; the border toward each neighbor carries the one
/// tone the two chords share.
TessellationPatch seventh_strip(const IncidenceStructure& t, int rows, int cols) {
  if (t.point_count() != 7 || t.block_count() != 7) {
    fail("seventh strips need seven points and seven blocks");
  }
  auto shared_point = [&t](int a, int b) {
    const auto& pa = t.block(a).points;
    const auto& pb = t.block(b).points;
    std::vector<int> shared;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) {
      fail("blocks " + t.block(a).label + " and " + t.block(b).label +
           " do not share exactly one point");
    }
    return t.point_label(shared.front());
  };

  TessellationPatch patch;
  patch.structure = t.name();
  patch.flavor = TessellationFlavor::bipartite;
  patch.rows = rows;
  patch.cols = cols;
  for (int r = 0; r < rows; ++r) {
    for (int q = 0; q < cols; ++q) {
      HexCell cell;
      cell.q = q;
      cell.r = r;
      int index = positive_mod(q + 3 * r, 7);
      cell.label = t.block(kThirdChain[index]).label;
      for (std::size_t d = 0; d < kHexDirections.size(); ++d) {
        int step = kHexDirections[d].first + 3 * kHexDirections[d].second;
        int other = positive_mod(index + step, 7);
        cell.neighbors[d] = t.block(kThirdChain[other]).label;
        cell.borders[d] = shared_point(kThirdChain[index], kThirdChain[other]);
      }
      patch.cells.push_back(std::move(cell));
    }
  }
  return patch;
}

/// Face-centered patches assign chromatic value (7q + 4r) mod 12 to the
/// hexagon at (q, r) and hang two corner families off it; the six corners
/// of a hexagon then walk a closed lane of the structure's incidence
/// graph around its center entity.
struct FaceRule {
  std::function<std::string(int)> cell;
  std::function<std::string(int)> corner_a;
  std::function<std::string(int)> corner_b;
};

TessellationPatch face_centered(const IncidenceStructure& t, int rows, int cols,
                                const FaceRule& rule) {
  if (t.point_count() != 12 || t.block_count() != 12) {
    fail("face-centered patches need twelve points and twelve blocks");
  }
  TessellationPatch patch;
  patch.structure = t.name();
  patch.flavor = TessellationFlavor::face_centered;
  patch.rows = rows;
  patch.cols = cols;
  for (int r = 0; r < rows; ++r) {
    for (int q = 0; q < cols; ++q) {
      HexCell cell;
      cell.q = q;
      cell.r = r;
      int v = positive_mod(7 * q + 4 * r, 12);
      cell.label = rule.cell(v);
      for (std::size_t d = 0; d < kHexDirections.size(); ++d) {
        int dv = 7 * kHexDirections[d].first + 4 * kHexDirections[d].second;
        cell.neighbors[d] = rule.cell(positive_mod(v + dv, 12));
      }
      // Corner k lies between the edges toward directions k-1 and k; the
      // base offsets come from the three hexagons meeting at each corner.
      cell.corners[0] = rule.corner_a(v);
      cell.corners[1] = rule.corner_b(v);
      cell.corners[2] = rule.corner_a(positive_mod(v - 4, 12));
      cell.corners[3] = rule.corner_b(positive_mod(v - 7, 12));
      cell.corners[4] = rule.corner_a(positive_mod(v - 7, 12));
      cell.corners[5] = rule.corner_b(positive_mod(v - 3, 12));
      patch.cells.push_back(std::move(cell));
    }
  }
  return patch;
}

std::string pitch_name(int v) { return PitchClass(v).name(); }

std::string chord_name(int v, ChordQuality quality) {
  return Chord(PitchClass(v), quality).name();
}

}  // namespace

TessellationPatch tessellation_patch(const IncidenceStructure& t, int rows, int cols,
                                     TessellationFlavor flavor) {
  if (rows < 1 || cols < 1) fail("a patch needs at least one row and one column");
  std::string kind = t.name().substr(0, t.name().find(' '));

  if (flavor == TessellationFlavor::bipartite) {
    if (kind == "diatonic_triads") return triad_strip(t, rows, cols);
    if (kind == "diatonic_sevenths") return seventh_strip(t, rows, cols);
  } else {
    if (kind == "eulerian") {
      return face_centered(t, rows, cols,
                           {pitch_name,
                            [](int v) { return chord_name(v, ChordQuality::major); },
                            [](int v) { return chord_name(v, ChordQuality::minor); }});
    }
    if (kind == "pitch_to_major") {
      return face_centered(
          t, rows, cols,
          {[](int v) { return chord_name(v, ChordQuality::minor); },
           [](int v) { return pitch_name(positive_mod(v + 7, 12)); },
           [](int v) { return chord_name(positive_mod(v + 3, 12), ChordQuality::major); }});
    }
    if (kind == "pitch_to_minor") {
      return face_centered(
          t, rows, cols,
          {[](int v) { return chord_name(v, ChordQuality::major); },
           [](int v) { return chord_name(positive_mod(v + 4, 12), ChordQuality::minor); },
           [](int v) { return pitch_name(positive_mod(v + 7, 12)); }});
    }
  }
  fail("no " +
       std::string(flavor == TessellationFlavor::bipartite ? "bipartite"
                                                           : "face-centered") +
       " tiling rule for " + t.name());
}

}  // namespace tonnetz
