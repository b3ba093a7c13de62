#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tonnetz/incidence.hpp"

namespace tonnetz {

/// One step of a charted progression: the chords involved and the points
/// they share. An empty pivot list marks a discontinuity.
struct ProgressionStep {
  std::string from;
  std::string to;
  std::vector<std::string> pivots;
};

struct ProgressionChart {
  std::vector<std::string> chords;
  std::vector<ProgressionStep> steps;
  bool continuous = false;

  /// The (from, to) pairs of every step without a pivot.
  std::vector<std::pair<std::string, std::string>> discontinuities() const;
  std::string text() const;
};

/// Walks the given block labels through the structure and records the
/// pivot points of each step. Needs at least two chords; unknown labels
/// are reported by name.
ProgressionChart chart_progression(const IncidenceStructure& s,
                                   const std::vector<std::string>& chords);

/// A shortest walk in a Levi graph that visits the given chord vertices
/// in order, with every intermediate vertex spelled out.
struct Trajectory {
  std::vector<std::string> walk;
  int length = 0;
  bool unique = false;

  std::string text() const;
};

/// Concatenates a shortest path for each consecutive chord pair. The walk
/// reported is the lexicographically least one by vertex index; `unique`
/// is true exactly when no other walk has the same total length.
Trajectory minimal_trajectory(const LeviGraph& g,
                              const std::vector<std::string>& chords);

}  // namespace tonnetz
