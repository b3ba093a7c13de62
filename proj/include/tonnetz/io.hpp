#pragma once

#include <string>
#include <vector>

#include "tonnetz/cycles.hpp"
#include "tonnetz/graph.hpp"
#include "tonnetz/incidence.hpp"
#include "tonnetz/score.hpp"
#include "tonnetz/tessellation.hpp"

namespace tonnetz {

/// Graphviz text for a plain graph; vertex labels are optional and the
/// empty graph renders as header and footer alone.
std::string export_dot(const Graph& g, const std::vector<std::string>& labels = {},
                       const std::string& name = "g");

/// Graphviz text for an incidence graph: points drawn as ellipses, blocks
/// as boxes.
std::string export_dot(const LeviGraph& g, const std::string& name = "g");

/// Cycle census as comma-separated text, lengths as rows, deviation
/// counts as columns, totals on the right and bottom.
std::string export_csv(const CycleTable& t);

/// Structure as JSON: name, point labels, blocks with label and point
/// indices. import_json reads the same shape back and validates it.
std::string export_json(const IncidenceStructure& s);
IncidenceStructure import_json(const std::string& text);

/// Standard MIDI file bytes, format 0, 480 ticks per quarter: one
/// chord-on/chord-off pair per event, velocity 80, channel 0. Tones sound
/// in octave 4 (C4 = 60); a pedal sustains below them in octave 2 for the
/// whole piece.
std::string export_midi(const Score& score);

/// Hexagon patch as a standalone SVG drawing.
std::string export_svg(const TessellationPatch& patch);

/// Writes bytes to a path, failing loudly with the path in the message.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace tonnetz
