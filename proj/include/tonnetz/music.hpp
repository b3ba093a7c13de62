#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonnetz/errors.hpp"

namespace tonnetz {

/// Pitch class in twelve-tone equal temperament, C = 0. Display names
/// prefer flats (Db, Eb, Gb, Ab, Bb); parsing accepts sharps too.
class PitchClass {
 public:
  explicit PitchClass(int value);
  static PitchClass parse(std::string_view name);
  static std::optional<PitchClass> try_parse(std::string_view name);

  int value() const { return value_; }
  std::string name() const;
  PitchClass transposed(int semitones) const { return PitchClass(value_ + semitones); }
  /// Smaller of the two step counts between the classes (0..6).
  int interval_to(PitchClass other) const;

  auto operator<=>(const PitchClass&) const = default;

 private:
  int value_;
};

enum class ChordQuality {
  major,
  minor,
  diminished,
  augmented,
  major7,
  minor7,
  dominant7,
  half_diminished7,
};

/// Stacked-third chord: root plus a quality-defined interval template.
class Chord {
 public:
  Chord(PitchClass root, ChordQuality quality);
  /// Syntax: root name + one of M, m, dim, aug, M7, m7, V7, "ø7" (ASCII "o7").
  static Chord parse(std::string_view text);
  static std::optional<Chord> try_parse(std::string_view text);
  /// Chord whose pitch content equals the given set, if any.
  static std::optional<Chord> from_pitch_set(const std::vector<PitchClass>& pitches);

  PitchClass root() const { return root_; }
  ChordQuality quality() const { return quality_; }
  bool is_seventh() const;
  std::string name() const;
  /// Pitches in template order, root first.
  std::vector<PitchClass> pitches() const;
  /// Pitches sorted by value; use for set comparisons.
  std::vector<PitchClass> pitch_set() const;

  auto operator<=>(const Chord&) const = default;

 private:
  PitchClass root_;
  ChordQuality quality_;
};

enum class ScaleKind { major, natural_minor, pentatonic, chromatic, hexachord };

/// Ordered pitch collection. For hexachords the member order is load
/// bearing: position k realizes tag k+1 in duad expressions.
class Scale {
 public:
  static Scale major(PitchClass tonic);
  static Scale natural_minor(PitchClass tonic);
  static Scale pentatonic(std::vector<PitchClass> members);
  static Scale default_pentatonic();  // C D E G A
  static Scale chromatic();
  static Scale hexachord(std::vector<PitchClass> members);
  /// "C:major", "Eb:minor", or a comma list of 5, 6, or 12 notes.
  static Scale parse(std::string_view text);

  ScaleKind kind() const { return kind_; }
  PitchClass tonic() const { return members_.front(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<PitchClass>& members() const { return members_; }
  PitchClass member(int position) const;
  bool contains(PitchClass p) const;
  std::string description() const;

 private:
  Scale(ScaleKind kind, std::vector<PitchClass> members);
  ScaleKind kind_;
  std::vector<PitchClass> members_;
};

/// Scale degree 1..7 with the quality the scale induces there.
struct Degree {
  int number = 1;
  ChordQuality quality = ChordQuality::major;

  std::string numeral() const;
  static std::optional<int> parse_numeral(std::string_view text);
};

/// Triads on degrees n, n+2, n+4 of a seven-note scale.
std::vector<std::pair<Degree, Chord>> triads_of_scale(const Scale& s);

/// Sevenths on degrees n, n+2, n+4, n+6 of a seven-note scale.
std::vector<std::pair<Degree, Chord>> sevenths_of_scale(const Scale& s);

/// Root, third, and seventh of a seventh chord (the fifth is dropped).
std::array<PitchClass, 3> root_third_seventh(const Chord& c);

/// The three major or three minor triads containing p, root-first order
/// p, p-4, p-7 (major) or p, p-3, p-7 (minor).
std::array<Chord, 3> triads_containing(PitchClass p, ChordQuality quality);

}  // namespace tonnetz
