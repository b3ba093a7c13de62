#include "tonnetz/music.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tonnetz {
namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B",
};

const std::map<std::string, int, std::less<>> kSpellings = {
    {"C", 0},  {"B#", 0},  {"C#", 1},  {"Db", 1},  {"D", 2},  {"D#", 3},
    {"Eb", 3}, {"E", 4},   {"Fb", 4},  {"E#", 5},  {"F", 5},  {"F#", 6},
    {"Gb", 6}, {"G", 7},   {"G#", 8},  {"Ab", 8},  {"A", 9},  {"A#", 10},
    {"Bb", 10}, {"B", 11}, {"Cb", 11},
};

int wrap12(int v) {
  int r = v % 12;
  return r < 0 ? r + 12 : r;
}

struct QualityInfo {
  ChordQuality quality;
  std::string_view suffix;
  std::vector<int> intervals;
};

const std::vector<QualityInfo>& quality_table() {
  static const std::vector<QualityInfo> table = {
      {ChordQuality::major, "M", {0, 4, 7}},
      {ChordQuality::minor, "m", {0, 3, 7}},
      {ChordQuality::diminished, "dim", {0, 3, 6}},
      {ChordQuality::augmented, "aug", {0, 4, 8}},
      {ChordQuality::major7, "M7", {0, 4, 7, 11}},
      {ChordQuality::minor7, "m7", {0, 3, 7, 10}},
      {ChordQuality::dominant7, "V7", {0, 4, 7, 10}},
      {ChordQuality::half_diminished7, "ø7", {0, 3, 6, 10}},
  };
  return table;
}

const QualityInfo& info_for(ChordQuality q) {
  for (const auto& row : quality_table()) {
    if (row.quality == q) return row;
  }
  fail("unknown chord quality");
}

}  // namespace

PitchClass::PitchClass(int value) : value_(wrap12(value)) {}

std::optional<PitchClass> PitchClass::try_parse(std::string_view name) {
  auto it = kSpellings.find(name);
  if (it == kSpellings.end()) return std::nullopt;
  return PitchClass(it->second);
}

PitchClass PitchClass::parse(std::string_view name) {
  auto p = try_parse(name);
  if (!p) fail("unknown pitch name \"" + std::string(name) + "\"");
  return *p;
}

std::string PitchClass::name() const { return std::string(kNames.at(value_)); }

int PitchClass::interval_to(PitchClass other) const {
  int d = wrap12(other.value_ - value_);
  return std::min(d, 12 - d);
}

Chord::Chord(PitchClass root, ChordQuality quality) : root_(root), quality_(quality) {}

std::optional<Chord> Chord::try_parse(std::string_view text) {
  // Root names are one or two characters; try the longer spelling first
  // so "Bb..." is not read as root B.
  for (std::size_t root_len : {2u, 1u}) {
    if (text.size() <= root_len) continue;
    auto root = PitchClass::try_parse(text.substr(0, root_len));
    if (!root) continue;
    std::string_view suffix = text.substr(root_len);
    if (suffix == "o7") return Chord(*root, ChordQuality::half_diminished7);
    for (const auto& row : quality_table()) {
      if (suffix == row.suffix) return Chord(*root, row.quality);
    }
  }
  return std::nullopt;
}

Chord Chord::parse(std::string_view text) {
  auto c = try_parse(text);
  if (!c) fail("cannot parse chord \"" + std::string(text) + "\"");
  return *c;
}

std::optional<Chord> Chord::from_pitch_set(const std::vector<PitchClass>& pitches) {
  std::vector<PitchClass> want(pitches);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  for (int r = 0; r < 12; ++r) {
    for (const auto& row : quality_table()) {
      Chord c(PitchClass(r), row.quality);
      if (c.pitch_set() == want) return c;
    }
  }
  return std::nullopt;
}

bool Chord::is_seventh() const { return info_for(quality_).intervals.size() == 4; }

std::string Chord::name() const {
  return root_.name() + std::string(info_for(quality_).suffix);
}

std::vector<PitchClass> Chord::pitches() const {
  std::vector<PitchClass> out;
  for (int step : info_for(quality_).intervals) out.push_back(root_.transposed(step));
  return out;
}

std::vector<PitchClass> Chord::pitch_set() const {
  auto out = pitches();
  std::sort(out.begin(), out.end());
  return out;
}

Scale::Scale(ScaleKind kind, std::vector<PitchClass> members)
    : kind_(kind), members_(std::move(members)) {}

Scale Scale::major(PitchClass tonic) {
  std::vector<PitchClass> m;
  for (int step : {0, 2, 4, 5, 7, 9, 11}) m.push_back(tonic.transposed(step));
  return Scale(ScaleKind::major, std::move(m));
}

Scale Scale::natural_minor(PitchClass tonic) {
  std::vector<PitchClass> m;
  for (int step : {0, 2, 3, 5, 7, 8, 10}) m.push_back(tonic.transposed(step));
  return Scale(ScaleKind::natural_minor, std::move(m));
}

namespace {
void require_distinct(const std::vector<PitchClass>& members, std::string_view what) {
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(std::string(what) + " members must be distinct");
  }
}
}  // namespace

Scale Scale::pentatonic(std::vector<PitchClass> members) {
  if (members.size() != 5) fail("pentatonic scale needs 5 notes");
  require_distinct(members, "pentatonic scale");
  return Scale(ScaleKind::pentatonic, std::move(members));
}

Scale Scale::default_pentatonic() {
  return pentatonic({PitchClass(0), PitchClass(2), PitchClass(4), PitchClass(7), PitchClass(9)});
}

Scale Scale::chromatic() {
  std::vector<PitchClass> m;
  for (int v = 0; v < 12; ++v) m.push_back(PitchClass(v));
  return Scale(ScaleKind::chromatic, std::move(m));
}

Scale Scale::hexachord(std::vector<PitchClass> members) {
  if (members.size() != 6) fail("hexachord needs 6 notes");
  require_distinct(members, "hexachord");
  return Scale(ScaleKind::hexachord, std::move(members));
}

Scale Scale::parse(std::string_view text) {
  if (text == "chromatic") return chromatic();
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    PitchClass tonic = PitchClass::parse(text.substr(0, colon));
    std::string_view mode = text.substr(colon + 1);
    if (mode == "major") return major(tonic);
    if (mode == "minor") return natural_minor(tonic);
    fail("unknown scale mode \"" + std::string(mode) + "\"");
  }
  std::vector<PitchClass> members;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (!token.empty()) members.push_back(PitchClass::parse(token));
  }
  switch (members.size()) {
    case 5: return pentatonic(std::move(members));
    case 6: return hexachord(std::move(members));
    case 12: {
      require_distinct(members, "chromatic scale");
      return chromatic();
    }
    default:
      fail("scale list needs 5, 6, or 12 notes, got " + std::to_string(members.size()));
  }
}

PitchClass Scale::member(int position) const {
  if (position < 0 || position >= size()) {
    fail("scale position " + std::to_string(position) + " out of range");
  }
  return members_[static_cast<std::size_t>(position)];
}

bool Scale::contains(PitchClass p) const {
  return std::find(members_.begin(), members_.end(), p) != members_.end();
}

std::string Scale::description() const {
  switch (kind_) {
    case ScaleKind::major: return tonic().name() + " major";
    case ScaleKind::natural_minor: return tonic().name() + " minor";
    case ScaleKind::chromatic: return "chromatic";
    case ScaleKind::pentatonic:
    case ScaleKind::hexachord: {
      std::string out = kind_ == ScaleKind::pentatonic ? "pentatonic" : "hexachord";
      out += " [";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ' ';
        out += members_[i].name();
      }
      out += ']';
      return out;
    }
  }
  fail("unknown scale kind");
}

std::string Degree::numeral() const {
  constexpr std::array<std::string_view, 7> numerals = {"I", "II", "III", "IV",
                                                        "V", "VI", "VII"};
  if (number < 1 || number > 7) fail("degree out of range");
  return std::string(numerals[static_cast<std::size_t>(number - 1)]);
}

std::optional<int> Degree::parse_numeral(std::string_view text) {
  constexpr std::array<std::string_view, 7> numerals = {"I", "II", "III", "IV",
                                                        "V", "VI", "VII"};
  for (int i = 0; i < 7; ++i) {
    if (text == numerals[static_cast<std::size_t>(i)]) return i + 1;
  }
  return std::nullopt;
}

namespace {

Chord classify(const std::vector<PitchClass>& stack) {
  std::vector<PitchClass> want(stack);
  std::sort(want.begin(), want.end());
  for (const auto& row : quality_table()) {
    Chord c(stack.front(), row.quality);
    if (c.pitch_set() == want) return c;
  }
  std::string names;
  for (const auto& p : stack) names += p.name() + " ";
  fail("pitch stack " + names + "does not form a chord");
}

std::vector<std::pair<Degree, Chord>> stacked_chords(const Scale& s, int depth) {
  if (s.size() != 7) fail("chords by degree need a seven-note scale");
  std::vector<std::pair<Degree, Chord>> out;
  for (int n = 0; n < 7; ++n) {
    std::vector<PitchClass> stack;
    for (int k = 0; k < depth; ++k) stack.push_back(s.member((n + 2 * k) % 7));
    Chord c = classify(stack);
    out.push_back({Degree{n + 1, c.quality()}, c});
  }
  return out;
}

}  // namespace

std::vector<std::pair<Degree, Chord>> triads_of_scale(const Scale& s) {
  return stacked_chords(s, 3);
}

std::vector<std::pair<Degree, Chord>> sevenths_of_scale(const Scale& s) {
  return stacked_chords(s, 4);
}

std::array<PitchClass, 3> root_third_seventh(const Chord& c) {
  if (!c.is_seventh()) fail("chord " + c.name() + " has no seventh");
  auto p = c.pitches();
  return {p[0], p[1], p[3]};
}

std::array<Chord, 3> triads_containing(PitchClass p, ChordQuality quality) {
  int third = 0;
  if (quality == ChordQuality::major) {
    third = 4;
  } else if (quality == ChordQuality::minor) {
    third = 3;
  } else {
    fail("triads_containing expects major or minor");
  }
  return {Chord(p, quality), Chord(p.transposed(-third), quality),
          Chord(p.transposed(-7), quality)};
}

}  // namespace tonnetz
