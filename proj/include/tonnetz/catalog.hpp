#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tonnetz/cycles.hpp"
#include "tonnetz/graph.hpp"
#include "tonnetz/incidence.hpp"
#include "tonnetz/music.hpp"

namespace tonnetz {

// Classical cubic graphs, built from their LCF descriptions. They serve as
// recognition targets: several musical structures below have Levi graphs
// isomorphic to one of these.
Graph heawood_graph();
Graph desargues_graph();
Graph tutte_coxeter_graph();

/// Cycle given by vertex labels -> vertex indices, validating that every
/// consecutive pair (and the closing pair) is an edge.
std::vector<int> cycle_from_labels(const LeviGraph& g, const std::vector<std::string>& labels);

// ---------------------------------------------------------------------------
// Chromatic triad structures
// ---------------------------------------------------------------------------

/// Points are the 12 major triads, blocks the 12 minor triads; a major
/// belongs to a minor's block exactly when the two chords share two tones.
/// Cm sits over {CM, EbM, AbM}; CM lies in {Cm, Em, Am}.
IncidenceStructure build_eulerian_tonnetz();

/// Hamiltonian reference for the fused-triad Levi graph: majors step down
/// the circle of fifths, each followed by its relative minor. The 12 chords
/// it leaves out are exactly the parallel major/minor edges.
std::vector<std::string> eulerian_reference_labels();

/// The 12 pitch classes joined when their interval is 3, 4, or 5 steps,
/// plus the list of triangles that count as faces: the 24 consonant triads.
/// (Augmented triangles exist in the graph but are not faces.)
struct PitchClassGraph {
  std::vector<std::string> labels;  // pitch names, C first
  Graph graph;
  std::vector<Chord> faces;  // sorted by root, majors before minors
};

PitchClassGraph build_pitch_class_graph();

/// Witness that the pitch-class graph and the fused-triad Levi graph are
/// planar duals: edges correspond to edges, vertices to hexagonal faces,
/// triangular faces to vertices.
struct DualityReport {
  bool ok = false;
  std::string detail;  // first violation when !ok
  /// pitch edge -> Levi edge (the two faces sharing that pitch edge).
  std::vector<std::pair<std::pair<std::string, std::string>,
                        std::pair<std::string, std::string>>>
      edge_pairs;
  /// pitch vertex -> the hexacycle of its six triads, as Levi labels.
  std::vector<std::pair<std::string, std::vector<std::string>>> vertex_faces;
};

DualityReport check_duality(const PitchClassGraph& pg, const LeviGraph& levi);

// ---------------------------------------------------------------------------
// Diatonic structures
// ---------------------------------------------------------------------------

/// Points are the 7 scale tones (note names), blocks the triads I..VII.
/// Requires a 7-note scale. Girth of the Levi graph is 4.
IncidenceStructure build_diatonic_triad_tonnetz(const Scale& s);

/// Points are the 7 scale tones, blocks the sevenths I..VII reduced to
/// root, third, and seventh. The Levi graph is the Heawood graph.
IncidenceStructure build_diatonic_seventh_tonnetz(const Scale& s);

/// Hamiltonian reference for the seventh-chord Levi graph: tones on odd
/// degrees interleaved with their chords, <1 I 3 III 5 V 7 VII 2 II 4 IV
/// 6 VI> with tones written as note names.
std::vector<std::string> diatonic_seventh_reference_labels(const Scale& s);

// ---------------------------------------------------------------------------
// Pentatonic and other subset structures
// ---------------------------------------------------------------------------

/// Points are the two-tone clusters of a five-note scale, blocks the
/// three-tone clusters, incidence by containment. Labels concatenate the
/// tone labels in scale order. The Levi graph is the Desargues graph.
IncidenceStructure build_pentatonic_tonnetz(
    const std::vector<std::string>& tones = {"C", "D", "E", "G", "A"});

/// Hamiltonian reference for the pentatonic Levi graph, fixed so that
/// deviation tables and the perimeter score are reproducible. Discovered
/// once by find_reference_hamiltonian against the pinned cycle census.
std::vector<std::string> pentatonic_reference_labels(
    const std::vector<std::string>& tones = {"C", "D", "E", "G", "A"});

/// k-subsets versus (k+1)-subsets of an m-note scale, m odd, k=(m-1)/2,
/// incidence by containment. Labels are digit strings. m=3 gives a single
/// hexacycle, m=5 the Desargues graph, m=7 the two-cluster structure of a
/// diatonic scale, m=9 a {126_5}.
IncidenceStructure build_odd_scale_tonnetz(int m);

// ---------------------------------------------------------------------------
// Duads and synthemes
// ---------------------------------------------------------------------------

/// The complete combinatorial system behind the six-tone structure:
/// 15 duads (pairs from {1..6}), 15 synthemes (partitions of {1..6} into
/// three duads), 6 totals (families of five synthemes that use each duad
/// once). Letters a..f name the totals; each syntheme lies in exactly two
/// totals and is named by that letter pair.
struct TwelveToneSystem {
  IncidenceStructure structure;  // points "12".."56", blocks "ab".."ef"
  Scale hexachord;               // tone realizing tag k is member k-1

  std::vector<std::string> duads;            // 15 duad labels, lexicographic
  std::vector<std::array<int, 3>> synthemes; // duad index triples, sorted
  std::vector<std::array<int, 5>> totals;    // syntheme ids, letter order a..f
  std::vector<std::string> letter_duads;     // 15 labels "ab".."ef"
  std::vector<int> block_synthemes;          // block/letter-duad -> syntheme id

  std::string syntheme_text(int syntheme) const;  // "12, 34, 56"
  /// Index of the unique syntheme in both totals (letters 0..5 = a..f).
  int syntheme_shared_by(int letter1, int letter2) const;
};

/// The hexachord used by the bundled twelve-tone composition.
Scale default_hexachord();  // F# G# C# D# E A#

/// Builds the duad/syntheme structure. The combinatorics are canonical;
/// the hexachord only affects how labels realize as pitches.
TwelveToneSystem build_duads_synthemes(const Scale& hexachord = default_hexachord());

/// Hamiltonian reference for the duad/syntheme Levi graph (the Tutte
/// Coxeter graph), pinned the same way as the pentatonic reference.
std::vector<std::string> twelve_tone_reference_labels();

/// The four cross-reference tables of the letter system.
struct LetterTables {
  /// Row per letter a..f: the five synthemes of that total, listed by the
  /// other letter in ascending order. Cells read "12, 34, 56".
  std::array<std::array<std::string, 5>, 6> synthemes_by_letter;
  /// Letter duad (lexicographic) -> its syntheme.
  std::array<std::pair<std::string, std::string>, 15> syntheme_of_letter_duad;
  /// Row per tone 1..6: for each other tone (ascending), the letter
  /// syntheme of that duad. Cells read "ab, cd, ef".
  std::array<std::array<std::string, 5>, 6> letter_synthemes_by_tone;
  /// Number duad (lexicographic) -> its letter syntheme.
  std::array<std::pair<std::string, std::string>, 15> letter_syntheme_of_duad;

  std::string text() const;  // all four tables, fixed layout
};

LetterTables letter_tables(const TwelveToneSystem& sys);

// ---------------------------------------------------------------------------
// Pitch-to-triad structures
// ---------------------------------------------------------------------------

/// Points are the 12 triads of the given quality (major or minor), blocks
/// the 12 pitch classes; pitch p's block holds the three triads containing
/// p. Isomorphic to the fused-triad structure, and the dual of the
/// major flavor is isomorphic to the minor flavor.
IncidenceStructure build_pitch_to_triad_tonnetz(ChordQuality quality);

/// Hamiltonian reference walking the circle of fifths: each tone followed
/// by the triad rooted on it. The chords it leaves out join each tone to
/// the triad having it as third.
std::vector<std::string> pitch_to_triad_reference_labels(ChordQuality quality);

/// Hexacycles of a pitch-to-triad Levi graph sorted by deviation from a
/// reference: the 2-deviation hexacycles carry the opposite-quality triads
/// (their three pitches form one), the 3-deviation ones the augmented
/// triads. The paired chord is built from the cycle's pitch vertices.
struct HexacycleClassification {
  std::vector<std::pair<std::vector<int>, Chord>> opposite_quality;  // deviation 2
  std::vector<std::pair<std::vector<int>, Chord>> augmented;         // deviation 3
};

HexacycleClassification classify_hexacycles(const LeviGraph& levi,
                                            const std::vector<int>& reference);

// ---------------------------------------------------------------------------
// The tripartite chromatic graph
// ---------------------------------------------------------------------------

/// 12 pitch classes, 12 major and 12 minor triads in one graph: triads
/// join their tones, majors join minors sharing two tones. 36 vertices,
/// 108 edges, every vertex meeting each other class three times.
struct TripartiteTonnetz {
  std::vector<std::string> labels;  // pitches, then majors, then minors
  Graph graph;

  enum class Part { pitch, major, minor };
  Part part_of(int vertex) const;
  /// Vertex range of one part as [first, last).
  std::pair<int, int> part_range(Part part) const;
};

TripartiteTonnetz build_tripartite_tonnetz();

// ---------------------------------------------------------------------------
// Heptagon and cluster structures
// ---------------------------------------------------------------------------

/// Points are the 7 diatonic triads, blocks the 7 sevenths; triad n lies
/// in sevenths n and n-2. Both are labeled by chord names. The Levi graph
/// is a single 14-cycle.
IncidenceStructure build_triad_seventh_heptagon(const Scale& s);

/// Three-tone versus four-tone clusters of a 7-note scale, incidence by
/// containment: the odd-scale structure for m=7 wearing note names.
IncidenceStructure build_diatonic_cluster_tonnetz(const Scale& s);

}  // namespace tonnetz
