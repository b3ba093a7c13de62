#include "tonnetz/score.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "tonnetz/cycles.hpp"
#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

void append_beats(std::ostringstream& out, double beats) {
  if (beats == std::floor(beats)) {
    out << static_cast<long long>(beats);
  } else {
    out << beats;
  }
  out << (beats == 1.0 ? " beat" : " beats");
}

}  // namespace

std::string Score::text() const {
  std::ostringstream out;
  out << title << '\n';
  out << "scale: " << scale << '\n';
  if (pedal) out << "pedal: " << pedal->name() << '\n';
  out << events.size() << " events\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    out << (i + 1) << ": ";
    for (std::size_t k = 0; k < events[i].tones.size(); ++k) {
      if (k > 0) out << ' ';
      out << events[i].tones[k].name();
    }
    out << " (";
    append_beats(out, events[i].beats);
    out << ")\n";
  }
  return out.str();
}

std::vector<PitchClass> parse_pitch_set(const std::string& label, const Scale& s) {
  if (label.empty()) fail("empty label has no pitch content");
  std::vector<PitchClass> tones;
  std::size_t i = 0;
  while (i < label.size()) {
    // Two-character note names (Eb, F#) take precedence over single letters.
    std::optional<PitchClass> note;
    if (i + 1 < label.size()) note = PitchClass::try_parse(label.substr(i, 2));
    std::size_t taken = 2;
    if (!note) {
      note = PitchClass::try_parse(label.substr(i, 1));
      taken = 1;
    }
    if (note) {
      if (!s.contains(*note)) {
        fail("note " + note->name() + " of label " + label + " is not in the scale");
      }
      tones.push_back(*note);
      i += taken;
      continue;
    }
    char c = label[i];
    if (c >= '1' && c <= '9') {
      int position = c - '1';
      if (position >= s.size()) {
        fail("position " + std::string(1, c) + " of label " + label +
             " is beyond the scale");
      }
      tones.push_back(s.member(position));
      ++i;
      continue;
    }
    fail("label " + label + " is neither note names nor scale positions");
  }
  return tones;
}

Score cycle_to_score(const LeviGraph& g, const std::vector<std::vector<int>>& units,
                     const Scale& s, int repeats_per_unit, double beat) {
  if (units.empty()) fail("a score needs at least one cycle unit");
  if (repeats_per_unit < 1) fail("repeats_per_unit must be positive");
  if (beat <= 0.0) fail("beat length must be positive");
  Score score;
  score.scale = s.description();
  for (const auto& unit : units) {
    if (unit.empty()) fail("a cycle unit has no vertices");
    for (int v : unit) {
      if (v < 0 || v >= g.graph.vertex_count()) {
        fail("cycle unit vertex out of range");
      }
    }
    for (int repeat = 0; repeat < repeats_per_unit; ++repeat) {
      for (int v : unit) {
        if (v < g.white_count) continue;
        score.events.push_back({parse_pitch_set(g.labels[v], s), beat});
      }
    }
  }
  return score;
}

std::vector<PitchClass> realize_duad(const std::string& duad, const Scale& hexachord) {
  if (duad.size() != 2) fail("duad " + duad + " must name exactly two tags");
  std::vector<PitchClass> tones;
  for (char c : duad) {
    if (c < '1' || c > '9') fail("duad " + duad + " has a tag outside 1..9");
    int position = c - '1';
    if (position >= hexachord.size()) {
      fail("duad " + duad + " names a tag beyond the collection");
    }
    tones.push_back(hexachord.member(position));
  }
  if (tones[0] == tones[1]) fail("duad " + duad + " repeats a tag");
  return tones;
}

std::vector<std::vector<PitchClass>> realize_syntheme(const TwelveToneSystem& sys,
                                                      const std::string& letter_duad) {
  auto block = sys.structure.block_index(letter_duad);
  if (!block) fail("unknown syntheme label " + letter_duad);
  const auto& duads = sys.synthemes[sys.block_synthemes[*block]];
  std::vector<std::vector<PitchClass>> dyads;
  dyads.reserve(duads.size());
  for (int duad : duads) {
    dyads.push_back(realize_duad(sys.duads[duad], sys.hexachord));
  }
  return dyads;
}

Score compose_perimeter() {
  const std::vector<std::string> tones = {"C", "D", "Eb", "G", "Ab"};
  IncidenceStructure structure = build_pentatonic_tonnetz(tones);
  LeviGraph levi = levi_from_incidence(structure);
  std::vector<int> rim = cycle_from_labels(levi, pentatonic_reference_labels(tones));

  EdgeIndex edges(levi.graph);
  std::bitset<128> rim_mask = edges.mask_of(rim);
  std::vector<int> rim_position(levi.graph.vertex_count(), -1);
  for (std::size_t i = 0; i < rim.size(); ++i) {
    rim_position[rim[i]] = static_cast<int>(i);
  }

  // Hexacycles that reuse five rim edges: each runs along an arc of the
  // rim and closes with a single chord across.
  std::vector<std::pair<int, std::vector<int>>> arcs;
  int rim_size = static_cast<int>(rim.size());
  for (const auto& cycle : all_cycles(levi.graph, 6)) {
    if (cycle.size() != 6) continue;
    if (deviation(edges.mask_of(cycle), rim_mask) != 1) continue;
    std::vector<bool> on_arc(rim.size(), false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int u = cycle[i];
      int v = cycle[(i + 1) % cycle.size()];
      int pu = rim_position[u];
      int pv = rim_position[v];
      if (pu < 0 || pv < 0) continue;
      if ((pu + 1) % rim_size == pv) {
        on_arc[pu] = true;
      } else if ((pv + 1) % rim_size == pu) {
        on_arc[pv] = true;
      }
    }
    int start = -1;
    for (int i = 0; i < rim_size; ++i) {
      bool before = on_arc[(i + rim_size - 1) % rim_size];
      if (on_arc[i] && !before) {
        if (start >= 0) fail("rim hexacycle arc is not contiguous");
        start = i;
      }
    }
    if (start < 0) fail("rim hexacycle does not touch the rim");
    std::vector<int> blocks;
    for (int i = 0; i <= 5; ++i) {
      int v = rim[(start + i) % rim_size];
      if (v >= levi.white_count) blocks.push_back(v);
    }
    if (blocks.size() != 3) fail("rim arc does not alternate as expected");
    arcs.emplace_back(start, std::move(blocks));
  }
  if (arcs.size() != 5) fail("expected five rim hexacycles");
  std::sort(arcs.begin(), arcs.end());

  std::vector<std::vector<int>> units;
  units.reserve(arcs.size());
  for (auto& [start, blocks] : arcs) units.push_back(std::move(blocks));

  std::vector<PitchClass> members;
  members.reserve(tones.size());
  for (const auto& name : tones) members.push_back(PitchClass::parse(name));
  Score score = cycle_to_score(levi, units, Scale::pentatonic(members), 2, 1.0);
  score.title = "On the Perimeter";
  return score;
}

Score compose_decacycle(bool pedal) {
  TwelveToneSystem sys = build_duads_synthemes();
  LeviGraph levi = levi_from_incidence(sys.structure);
  const std::vector<std::string> stations = {"12", "ab", "56", "df", "13",
                                             "ac", "25", "bf", "36", "cd"};
  cycle_from_labels(levi, stations);  // proves the stations close a decacycle

  Score score;
  score.title = "Decacycle for Violin";
  score.scale = sys.hexachord.description();
  if (pedal) score.pedal = PitchClass(11);
  for (const auto& label : stations) {
    int v = *levi.vertex_by_label(label);
    if (levi.is_white(v)) {
      score.events.push_back({realize_duad(label, sys.hexachord), 1.0});
    } else {
      for (auto& dyad : realize_syntheme(sys, label)) {
        score.events.push_back({std::move(dyad), 1.0});
      }
    }
  }
  return score;
}

}  // namespace tonnetz
