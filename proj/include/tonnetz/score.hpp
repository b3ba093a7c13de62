#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tonnetz/catalog.hpp"
#include "tonnetz/incidence.hpp"
#include "tonnetz/music.hpp"

namespace tonnetz {

/// One sounding unit: the tones struck together and how long they last.
struct ScoreEvent {
  std::vector<PitchClass> tones;
  double beats = 1.0;

  bool operator==(const ScoreEvent&) const = default;
};

struct Score {
  std::string title;
  std::string scale;
  std::optional<PitchClass> pedal;
  std::vector<ScoreEvent> events;

  std::string text() const;
};

/// Pitch content named by a vertex label: a run of note names ("CDEb"),
/// or a run of 1-based scale positions ("134"). Tones come back in label
/// order, and every note name must belong to the scale.
std::vector<PitchClass> parse_pitch_set(const std::string& label, const Scale& s);

/// Plays the block vertices of each cycle unit in order, one chord event
/// per block; point vertices only steer the path and stay silent. Each
/// unit is sounded repeats_per_unit times, every event `beat` beats long.
Score cycle_to_score(const LeviGraph& g, const std::vector<std::vector<int>>& units,
                     const Scale& s, int repeats_per_unit = 1, double beat = 1.0);

/// The two tones a duad names under a hexachord: tag k sounds member k-1.
std::vector<PitchClass> realize_duad(const std::string& duad, const Scale& hexachord);

/// The three dyads of the syntheme a letter pair names, in duad order.
std::vector<std::vector<PitchClass>> realize_syntheme(const TwelveToneSystem& sys,
                                                      const std::string& letter_duad);

/// Five overlapping one-chord-repeated hexacycles walked along the rim of
/// the pentatonic structure, each sounded twice, over C D Eb G Ab.
Score compose_perimeter();

/// A ten-step alternation of duads and synthemes over the default
/// hexachord; synthemes unfold into their three dyads. The optional pedal
/// sustains a B below the line.
Score compose_decacycle(bool pedal = false);

}  // namespace tonnetz
