#include "tonnetz/verification.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tonnetz/cycles.hpp"
#include "tonnetz/errors.hpp"
#include "tonnetz/graph.hpp"
#include "tonnetz/io.hpp"
#include "tonnetz/isomorphism.hpp"
#include "tonnetz/progression.hpp"
#include "tonnetz/score.hpp"
#include "tonnetz/tessellation.hpp"

namespace tonnetz {

std::vector<std::string> structure_names() {
  return {"eulerian",        "pitch_to_major",   "pitch_to_minor",
          "diatonic_triads", "diatonic_sevenths", "pentatonic",
          "odd_scale",       "duads_synthemes",   "heptagon",
          "diatonic_clusters"};
}

IncidenceStructure build_structure(const std::string& name,
                                   const StructureOptions& options) {
  if (name == "eulerian") return build_eulerian_tonnetz();
  if (name == "pitch_to_major") return build_pitch_to_triad_tonnetz(ChordQuality::major);
  if (name == "pitch_to_minor") return build_pitch_to_triad_tonnetz(ChordQuality::minor);
  if (name == "diatonic_triads") return build_diatonic_triad_tonnetz(options.scale);
  if (name == "diatonic_sevenths") return build_diatonic_seventh_tonnetz(options.scale);
  if (name == "pentatonic") return build_pentatonic_tonnetz(options.pentatonic_tones);
  if (name == "odd_scale") return build_odd_scale_tonnetz(options.odd_size);
  if (name == "duads_synthemes") return build_duads_synthemes(options.hexachord).structure;
  if (name == "heptagon") return build_triad_seventh_heptagon(options.scale);
  if (name == "diatonic_clusters") return build_diatonic_cluster_tonnetz(options.scale);
  std::string known;
  for (const auto& entry : structure_names()) {
    if (!known.empty()) known += ", ";
    known += entry;
  }
  fail("unknown structure " + name + "; known structures: " + known);
}

std::vector<std::string> reference_labels(const std::string& name,
                                          const StructureOptions& options) {
  if (name == "eulerian") return eulerian_reference_labels();
  if (name == "pitch_to_major") return pitch_to_triad_reference_labels(ChordQuality::major);
  if (name == "pitch_to_minor") return pitch_to_triad_reference_labels(ChordQuality::minor);
  if (name == "diatonic_sevenths") return diatonic_seventh_reference_labels(options.scale);
  if (name == "pentatonic") return pentatonic_reference_labels(options.pentatonic_tones);
  if (name == "duads_synthemes") return twelve_tone_reference_labels();
  fail("no pinned reference cycle for " + name);
}

bool VerificationRun::all_passed() const {
  return passed_count() == static_cast<int>(checks.size());
}

int VerificationRun::passed_count() const {
  int n = 0;
  for (const auto& check : checks) {
    if (check.passed) ++n;
  }
  return n;
}

std::string VerificationRun::report() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << (check.passed ? "ok   " : "FAIL ") << check.group << " | "
        << check.name << ": " << check.detail << '\n';
  }
  if (!artifacts.empty()) {
    out << "artifacts:\n";
    for (const auto& [name, bytes] : artifacts) {
      out << "  " << name << " (" << bytes.size() << " bytes)\n";
    }
  }
  int passed = passed_count();
  out << checks.size() << " checks, " << passed << " passed, "
      << (checks.size() - passed) << " failed\n";
  return out.str();
}

std::vector<std::string> verification_groups() {
  return {"eulerian",          "pitch_class_graph", "triad_family",
          "pitch_to_major",    "pitch_to_minor",    "diatonic_triads",
          "diatonic_sevenths", "pentatonic",        "odd_scale",
          "duads_synthemes",   "heptagon",          "diatonic_clusters",
          "tripartite",        "compositions"};
}

namespace {

void expect(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

class Runner {
 public:
  explicit Runner(std::string only) : only_(std::move(only)) {}

  bool wants(const std::string& group) const {
    return only_.empty() || only_ == group;
  }

  void check(const std::string& group, const std::string& name,
             const std::function<std::string()>& body) {
    CheckResult result;
    result.group = group;
    result.name = name;
    try {
      result.detail = body();
      result.passed = true;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    run.checks.push_back(std::move(result));
  }

  void artifact(const std::string& name, const std::string& bytes) {
    run.artifacts[name] = bytes;
  }

  VerificationRun run;

 private:
  std::string only_;
};

std::string configuration_detail(const LeviGraph& levi, const std::string& tag,
                                 int want_girth) {
  auto b = biregularity(levi);
  expect(b.type_tag() == tag, "expected a " + tag + ", got " + b.type_tag());
  auto g = girth(levi.graph);
  expect(g.has_value(), "incidence graph has no cycle at all");
  expect(*g == want_girth,
         "girth is " + std::to_string(*g) + ", not " + std::to_string(want_girth));
  if (want_girth >= 6) {
    expect(is_configuration(levi), "two blocks share two points");
  }
  return tag + ", girth " + std::to_string(want_girth);
}

/// Label mapping of an isomorphism between two incidence graphs.
std::string witness_text(const LeviGraph& a, const LeviGraph& b,
                         const std::vector<int>& mapping) {
  std::ostringstream out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    out << a.label(v) << " -> " << b.label(mapping[v]) << '\n';
  }
  return out.str();
}

/// Label-to-index mapping of an isomorphism onto a bare graph.
std::string witness_text(const LeviGraph& a, const std::vector<int>& mapping) {
  std::ostringstream out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    out << a.label(v) << " -> " << mapping[v] << '\n';
  }
  return out.str();
}

/// Color-blind isomorphism onto a classic cubic graph, validated.
std::vector<int> match_classic(const LeviGraph& levi, const Graph& classic) {
  std::vector<int> plain(static_cast<std::size_t>(levi.vertex_count()), 0);
  auto mapping = find_color_isomorphism(levi.graph, plain, classic, plain);
  expect(mapping.has_value(), "no relabeling onto the classic graph exists");
  expect(is_isomorphism(levi.graph, classic, *mapping), "witness rejected");
  return *mapping;
}

void verify_eulerian(Runner& r) {
  if (!r.wants("eulerian")) return;
  const std::string group = "eulerian";
  IncidenceStructure s = build_eulerian_tonnetz();
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{12_3}", 6); });

  r.check(group, "fused pairs", [&] {
    for (int y = 0; y < 12; ++y) {
      Chord minor(PitchClass(y), ChordQuality::minor);
      auto b = s.block_index(minor.name());
      expect(b.has_value(), "missing block " + minor.name());
      std::set<std::string> got;
      for (int p : s.block(*b).points) got.insert(s.point_label(p));
      std::set<std::string> want = {
          Chord(PitchClass(y), ChordQuality::major).name(),
          Chord(PitchClass(y + 3), ChordQuality::major).name(),
          Chord(PitchClass(y + 8), ChordQuality::major).name()};
      expect(got == want, "block " + minor.name() + " fuses the wrong majors");
    }
    return "every minor fuses the majors on its root and a minor third and sixth above";
  });

  r.check(group, "reference cycle", [&] {
    std::vector<int> ref = cycle_from_labels(levi, eulerian_reference_labels());
    expect(static_cast<int>(ref.size()) == levi.vertex_count(),
           "reference does not visit every chord");
    EdgeIndex index(levi.graph);
    auto mask = index.mask_of(ref);
    int skipped = 0;
    for (int v = 0; v < levi.vertex_count(); ++v) {
      for (int w : levi.graph.neighbors(v)) {
        if (w < v || mask[static_cast<std::size_t>(index.index_of(v, w))]) continue;
        ++skipped;
        Chord a = Chord::parse(levi.label(v));
        Chord b = Chord::parse(levi.label(w));
        expect(a.root() == b.root(), "skipped edge " + levi.label(v) + " - " +
                                         levi.label(w) + " is not a parallel pair");
      }
    }
    expect(skipped == 12, "expected twelve skipped edges");
    return "Hamiltonian; the twelve edges it skips are the parallel pairs";
  });

  r.check(group, "self-dual", [&] {
    expect(is_self_dual(s), "no side-swapping relabeling exists");
    return "side-swapping relabeling exists";
  });

  r.check(group, "tone hexagons", [&] {
    std::vector<int> ref = cycle_from_labels(levi, eulerian_reference_labels());
    EdgeIndex index(levi.graph);
    auto mask = index.mask_of(ref);
    std::set<std::vector<int>> two_out;
    for (const auto& cycle : all_cycles(levi.graph, 6)) {
      if (cycle.size() == 6 && deviation(index.mask_of(cycle), mask) == 2) {
        two_out.insert(cycle);
      }
    }
    expect(two_out.size() == 12, "expected twelve deviation-two hexacycles, got " +
                                     std::to_string(two_out.size()));
    for (int p = 0; p < 12; ++p) {
      std::vector<int> ring;
      for (ChordQuality q : {ChordQuality::major, ChordQuality::minor}) {
        for (const Chord& c : triads_containing(PitchClass(p), q)) {
          auto v = levi.vertex_by_label(c.name());
          expect(v.has_value(), "missing chord " + c.name());
          ring.push_back(*v);
        }
      }
      std::sort(ring.begin(), ring.end());
      Graph induced = induced_subgraph(levi.graph, ring);
      auto lanes = all_cycles(induced);
      expect(lanes.size() == 1 && lanes.front().size() == 6,
             "the six chords on " + PitchClass(p).name() +
                 " do not close a single hexagon");
      std::vector<int> lane;
      for (int v : lanes.front()) lane.push_back(ring[static_cast<std::size_t>(v)]);
      expect(two_out.count(canonical_cycle(lane)) > 0,
             "the hexagon of " + PitchClass(p).name() +
                 " does not leave the reference exactly twice");
    }
    return "the six chords on each tone close one deviation-two hexagon; twelve in all";
  });

  r.artifact("eulerian.json", export_json(s));
  r.artifact("eulerian.dot", export_dot(levi, "eulerian"));
  r.artifact("eulerian_faces.svg",
             export_svg(tessellation_patch(s, 3, 4, TessellationFlavor::face_centered)));
}

void verify_pitch_class_graph(Runner& r) {
  if (!r.wants("pitch_class_graph")) return;
  const std::string group = "pitch_class_graph";
  PitchClassGraph pg = build_pitch_class_graph();

  r.check(group, "circulant", [&] {
    expect(pg.graph.vertex_count() == 12, "expected twelve tones");
    int edges = 0;
    for (int v = 0; v < 12; ++v) {
      expect(pg.graph.degree(v) == 6,
             pg.labels[static_cast<std::size_t>(v)] + " does not have six neighbors");
      edges += pg.graph.degree(v);
    }
    expect(edges == 72, "expected thirty-six edges");
    auto g = girth(pg.graph);
    expect(g && *g == 3, "shortest lane is not a triangle");
    return "twelve tones, degree six, thirty-six edges";
  });

  r.check(group, "consonant faces", [&] {
    expect(pg.faces.size() == 24, "expected twenty-four faces, got " +
                                      std::to_string(pg.faces.size()));
    int majors = 0;
    int minors = 0;
    std::set<std::string> names;
    for (const Chord& face : pg.faces) {
      names.insert(face.name());
      if (face.quality() == ChordQuality::major) ++majors;
      if (face.quality() == ChordQuality::minor) ++minors;
    }
    expect(majors == 12 && minors == 12 && names.size() == 24,
           "faces are not the twelve major and twelve minor triads");
    auto has_edge = [&pg](int a, int b) {
      const auto& nb = pg.graph.neighbors(a % 12);
      return std::find(nb.begin(), nb.end(), b % 12) != nb.end();
    };
    for (int x = 0; x < 12; ++x) {
      expect(has_edge(x, x + 4) && has_edge(x + 4, x + 8) && has_edge(x + 8, x + 12),
             "an augmented triangle is missing");
      expect(!names.count(Chord(PitchClass(x), ChordQuality::augmented).name()),
             "an augmented triangle was taken for a face");
      expect(!has_edge(x, x + 6), "a tritone slipped into the edge set");
    }
    return "the faces are exactly the consonant triads; augmented triangles stay open";
  });

  r.check(group, "duality", [&] {
    DualityReport report = check_duality(pg, levi_from_incidence(build_eulerian_tonnetz()));
    expect(report.ok, report.detail);
    expect(report.edge_pairs.size() == 36, "expected thirty-six edge pairs");
    expect(report.vertex_faces.size() == 12, "expected twelve face rings");
    return "thirty-six edges matched both ways; six faces ring every tone";
  });

  std::vector<std::string> labels = pg.labels;
  r.artifact("pitch_class_graph.dot", export_dot(pg.graph, labels, "tones"));
}

void verify_triad_family(Runner& r) {
  if (!r.wants("triad_family")) return;
  const std::string group = "triad_family";
  LeviGraph eulerian = levi_from_incidence(build_eulerian_tonnetz());
  LeviGraph major_map =
      levi_from_incidence(build_pitch_to_triad_tonnetz(ChordQuality::major));
  LeviGraph minor_map =
      levi_from_incidence(build_pitch_to_triad_tonnetz(ChordQuality::minor));

  auto matched = [&r, &group](const std::string& name, const LeviGraph& a,
                              const LeviGraph& b, const std::string& artifact_name) {
    r.check(group, name, [&] {
      auto iso = are_isomorphic(a, b, true);
      expect(iso.has_value() && !iso->swaps_sides,
             "no color-preserving relabeling exists");
      expect(is_isomorphism(a.graph, b.graph, iso->mapping), "witness rejected");
      r.artifact(artifact_name, witness_text(a, b, iso->mapping));
      return std::string("witness over ") + std::to_string(a.vertex_count()) +
             " chords checks out";
    });
  };
  matched("major map vs fused triads", major_map, eulerian,
          "witness_pitch_to_major__eulerian.txt");
  matched("major map vs minor map", major_map, minor_map,
          "witness_pitch_to_major__pitch_to_minor.txt");
  matched("fused triads vs minor map", eulerian, minor_map,
          "witness_eulerian__pitch_to_minor.txt");

  r.check(group, "dual exchange", [&] {
    LeviGraph dual_major =
        levi_from_incidence(dual(build_pitch_to_triad_tonnetz(ChordQuality::major)));
    auto iso = are_isomorphic(dual_major, minor_map, true);
    expect(iso.has_value() && !iso->swaps_sides,
           "no color-preserving relabeling exists");
    expect(is_isomorphism(dual_major.graph, minor_map.graph, iso->mapping),
           "witness rejected");
    r.artifact("witness_dual_pitch_to_major__pitch_to_minor.txt",
               witness_text(dual_major, minor_map, iso->mapping));
    return "swapping sides of the major map lands on the minor map";
  });
}

void verify_pitch_to_triad(Runner& r, ChordQuality quality) {
  const std::string group = quality == ChordQuality::major ? "pitch_to_major"
                                                           : "pitch_to_minor";
  if (!r.wants(group)) return;
  IncidenceStructure s = build_pitch_to_triad_tonnetz(quality);
  LeviGraph levi = levi_from_incidence(s);
  ChordQuality opposite =
      quality == ChordQuality::major ? ChordQuality::minor : ChordQuality::major;

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{12_3}", 6); });

  r.check(group, "reference cycle", [&] {
    std::vector<int> ref =
        cycle_from_labels(levi, pitch_to_triad_reference_labels(quality));
    expect(static_cast<int>(ref.size()) == levi.vertex_count(),
           "reference does not visit every vertex");
    return "fifths-ordered Hamiltonian checks out";
  });

  r.check(group, "hexacycle chords", [&] {
    std::vector<int> ref =
        cycle_from_labels(levi, pitch_to_triad_reference_labels(quality));
    HexacycleClassification classes = classify_hexacycles(levi, ref);
    expect(classes.opposite_quality.size() == 12,
           "expected twelve deviation-two hexacycles, got " +
               std::to_string(classes.opposite_quality.size()));
    expect(classes.augmented.size() == 4,
           "expected four deviation-three hexacycles, got " +
               std::to_string(classes.augmented.size()));
    std::set<std::string> chords;
    for (const auto& [cycle, chord] : classes.opposite_quality) {
      expect(chord.quality() == opposite, chord.name() + " has the wrong quality");
      chords.insert(chord.name());
    }
    expect(chords.size() == 12, "the twelve lanes repeat a chord");
    std::set<std::string> rounds;
    for (const auto& [cycle, chord] : classes.augmented) {
      expect(chord.quality() == ChordQuality::augmented,
             chord.name() + " is not augmented");
      rounds.insert(chord.name());
    }
    expect(rounds.size() == 4, "the four augmented lanes repeat a chord");
    std::string flavor = opposite == ChordQuality::minor ? "minor" : "major";
    return "twelve lanes spell the twelve " + flavor +
           " triads, four spell the augmented ones";
  });

  if (quality == ChordQuality::major) {
    r.artifact("pitch_to_major_faces.svg",
               export_svg(tessellation_patch(s, 3, 4, TessellationFlavor::face_centered)));
  } else {
    r.artifact("pitch_to_minor_faces.svg",
               export_svg(tessellation_patch(s, 3, 4, TessellationFlavor::face_centered)));
  }
}

void verify_diatonic_triads(Runner& r) {
  if (!r.wants("diatonic_triads")) return;
  const std::string group = "diatonic_triads";
  IncidenceStructure s = build_diatonic_triad_tonnetz(Scale::major(PitchClass(0)));
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "biregular girth four", [&] {
    auto b = biregularity(levi);
    expect(b.type_tag() == "{7_3}", "expected a {7_3}, got " + b.type_tag());
    auto g = girth(levi.graph);
    expect(g && *g == 4, "girth is not four");
    expect(!is_configuration(levi), "triad pairs sharing two tones went missing");
    return "{7_3} of girth 4: two triads may share two tones";
  });

  r.check(group, "tetracycles", [&] {
    TetracycleReport report = count_tetracycles(levi);
    expect(report.count == 7, "expected seven tetracycles, got " +
                                  std::to_string(report.count));
    std::map<std::string, std::vector<std::array<int, 4>>> through;
    for (const auto& cycle : report.cycles) {
      through[levi.label(cycle[1])].push_back(cycle);
      through[levi.label(cycle[3])].push_back(cycle);
    }
    for (int b = 0; b < s.block_count(); ++b) {
      const std::string& label = s.block(b).label;
      expect(through[label].size() == 2,
             "degree " + label + " does not lie on exactly two tetracycles");
    }
    std::set<std::set<std::string>> around_one;
    for (const auto& cycle : through["I"]) {
      around_one.insert({levi.label(cycle[0]), levi.label(cycle[1]),
                         levi.label(cycle[2]), levi.label(cycle[3])});
    }
    std::set<std::set<std::string>> want = {{"I", "E", "VI", "C"},
                                            {"I", "E", "III", "G"}};
    expect(around_one == want, "the two tetracycles through I are wrong");
    return "seven tetracycles, two through each degree";
  });

  r.check(group, "shared-tone charts", [&] {
    ProgressionChart major_chart =
        chart_progression(s, {"I", "VI", "IV", "II", "V"});
    expect(major_chart.continuous, "the major walk broke apart");
    IncidenceStructure minor_s =
        build_diatonic_triad_tonnetz(Scale::natural_minor(PitchClass(0)));
    ProgressionChart minor_chart =
        chart_progression(minor_s, {"I", "VII", "III", "VI", "IV", "V"});
    expect(!minor_chart.continuous, "the minor walk should break");
    std::vector<std::pair<std::string, std::string>> want = {{"I", "VII"},
                                                             {"IV", "V"}};
    expect(minor_chart.discontinuities() == want,
           "the minor walk breaks in the wrong places");
    return "major walk continuous; minor walk breaks at (I, VII) and (IV, V)";
  });

  r.artifact("triad_strip.svg",
             export_svg(tessellation_patch(s, 3, 14, TessellationFlavor::bipartite)));
}

void verify_diatonic_sevenths(Runner& r) {
  if (!r.wants("diatonic_sevenths")) return;
  const std::string group = "diatonic_sevenths";
  IncidenceStructure s = build_diatonic_seventh_tonnetz(Scale::major(PitchClass(0)));
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{7_3}", 6); });

  r.check(group, "line pairs", [&] {
    int pairs = 0;
    for (int a = 0; a < s.block_count(); ++a) {
      for (int b = a + 1; b < s.block_count(); ++b) {
        std::vector<int> shared;
        std::set_intersection(s.block(a).points.begin(), s.block(a).points.end(),
                              s.block(b).points.begin(), s.block(b).points.end(),
                              std::back_inserter(shared));
        expect(shared.size() == 1, s.block(a).label + " and " + s.block(b).label +
                                       " do not meet in exactly one tone");
        ++pairs;
      }
    }
    expect(pairs == 21, "expected twenty-one pairs");
    return "all twenty-one chord pairs meet in exactly one tone";
  });

  r.check(group, "cage shape", [&] {
    std::vector<int> mapping = match_classic(levi, heawood_graph());
    r.artifact("witness_diatonic_sevenths__heawood.txt", witness_text(levi, mapping));
    return "fourteen-vertex witness checks out";
  });

  r.check(group, "reference cycle", [&] {
    std::vector<int> ref = cycle_from_labels(
        levi, diatonic_seventh_reference_labels(Scale::major(PitchClass(0))));
    expect(static_cast<int>(ref.size()) == levi.vertex_count(),
           "reference does not visit every vertex");
    return "thirds-ordered Hamiltonian checks out";
  });

  r.check(group, "unique trajectories", [&] {
    Trajectory major_walk =
        minimal_trajectory(levi, {"I", "VI", "IV", "II", "V"});
    expect(major_walk.unique, "major walk is not unique");
    LeviGraph minor_levi = levi_from_incidence(
        build_diatonic_seventh_tonnetz(Scale::natural_minor(PitchClass(0))));
    Trajectory minor_walk =
        minimal_trajectory(minor_levi, {"I", "VII", "III", "VI", "IV", "V"});
    expect(minor_walk.unique, "minor walk is not unique");
    return "shortest walks are unique: major length " +
           std::to_string(major_walk.length) + ", minor length " +
           std::to_string(minor_walk.length);
  });

  std::vector<int> ref = cycle_from_labels(
      levi, diatonic_seventh_reference_labels(Scale::major(PitchClass(0))));
  r.artifact("diatonic_sevenths_census.csv",
             export_csv(CycleTable::from_cycles(levi.graph, all_cycles(levi.graph), ref)));
  r.artifact("diatonic_sevenths.json", export_json(s));
  r.artifact("seventh_strip.svg",
             export_svg(tessellation_patch(s, 3, 7, TessellationFlavor::bipartite)));
}

void verify_pentatonic(Runner& r) {
  if (!r.wants("pentatonic")) return;
  const std::string group = "pentatonic";
  IncidenceStructure s = build_pentatonic_tonnetz();
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{10_3}", 6); });

  r.check(group, "classic shape", [&] {
    std::vector<int> mapping = match_classic(levi, desargues_graph());
    r.artifact("witness_pentatonic__desargues.txt", witness_text(levi, mapping));
    return "twenty-vertex witness checks out";
  });

  r.check(group, "reference cycle", [&] {
    std::vector<int> ref = cycle_from_labels(levi, pentatonic_reference_labels());
    expect(static_cast<int>(ref.size()) == levi.vertex_count(),
           "reference does not visit every vertex");
    return "pinned rim checks out";
  });

  std::vector<int> ref = cycle_from_labels(levi, pentatonic_reference_labels());
  r.artifact("pentatonic_census.csv",
             export_csv(CycleTable::from_cycles(levi.graph, all_cycles(levi.graph), ref)));
}

void verify_odd_scale(Runner& r) {
  if (!r.wants("odd_scale")) return;
  const std::string group = "odd_scale";

  for (int m : {3, 5, 7, 9}) {
    r.check(group, "parameters m=" + std::to_string(m), [&] {
      IncidenceStructure s = build_odd_scale_tonnetz(m);
      LeviGraph levi = levi_from_incidence(s);
      auto b = biregularity(levi);
      expect(b.is_biregular && b.is_square, "not biregular and square");
      int k = (m - 1) / 2;
      expect(b.points_per_block == k + 1,
             "blocks do not hold " + std::to_string(k + 1) + " points");
      expect(count_tetracycles(levi).count == 0, "a tetracycle appeared");

      // Complementation swaps the two sides and reverses containment, so
      // it is a side-swapping relabeling onto itself.
      std::vector<int> swap(static_cast<std::size_t>(levi.vertex_count()), -1);
      for (int v = 0; v < levi.vertex_count(); ++v) {
        std::set<char> digits;
        for (int d = 1; d <= m; ++d) digits.insert(static_cast<char>('0' + d));
        for (char c : levi.label(v)) digits.erase(c);
        std::string complement(digits.begin(), digits.end());
        auto w = levi.vertex_by_label(complement);
        expect(w.has_value(), "complement label " + complement + " is missing");
        expect(levi.is_white(v) != levi.is_white(*w), "complement kept the side");
        swap[static_cast<std::size_t>(v)] = *w;
      }
      expect(is_isomorphism(levi.graph, levi.graph, swap),
             "complementation is not edge-preserving");
      return b.type_tag() + ", tetracycle-free, complement swaps the sides";
    });
  }

  r.check(group, "m=3 single lane", [&] {
    LeviGraph levi = levi_from_incidence(build_odd_scale_tonnetz(3));
    auto cycles = all_cycles(levi.graph);
    expect(cycles.size() == 1 && cycles.front().size() == 6,
           "expected one hexagonal lane");
    return "the whole graph is one hexacycle";
  });

  r.check(group, "m=5 classic shape", [&] {
    LeviGraph levi = levi_from_incidence(build_odd_scale_tonnetz(5));
    std::vector<int> mapping = match_classic(levi, desargues_graph());
    r.artifact("witness_odd_scale_5__desargues.txt", witness_text(levi, mapping));
    return "twenty-vertex witness checks out";
  });

  r.check(group, "m=7 matches the clusters", [&] {
    IncidenceStructure digits = build_odd_scale_tonnetz(7);
    Scale scale = Scale::major(PitchClass(0));
    auto rename = [&scale](const std::string& label) {
      std::string out;
      for (char c : label) out += scale.member(c - '1').name();
      return out;
    };
    std::vector<std::string> points;
    for (const auto& label : digits.point_labels()) points.push_back(rename(label));
    std::vector<Block> blocks;
    for (const auto& block : digits.blocks()) {
      blocks.push_back({rename(block.label), block.points});
    }
    IncidenceStructure renamed("renamed", std::move(points), std::move(blocks));
    IncidenceStructure clusters =
        build_diatonic_cluster_tonnetz(Scale::major(PitchClass(0)));
    expect(renamed.same_up_to_order(clusters),
           "tone clusters disagree with the position structure");
    return "relabeling scale positions by tones lands on the cluster structure";
  });
}

void verify_duads_synthemes(Runner& r) {
  if (!r.wants("duads_synthemes")) return;
  const std::string group = "duads_synthemes";
  TwelveToneSystem sys = build_duads_synthemes();
  LeviGraph levi = levi_from_incidence(sys.structure);

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{15_3}", 8); });

  r.check(group, "cage shape", [&] {
    std::vector<int> mapping = match_classic(levi, tutte_coxeter_graph());
    r.artifact("witness_duads_synthemes__cage.txt", witness_text(levi, mapping));
    return "thirty-vertex witness checks out";
  });

  r.check(group, "cycle counts", [&] {
    auto short_cycles = all_cycles(levi.graph, 8);
    int octacycles = 0;
    for (const auto& cycle : short_cycles) {
      expect(cycle.size() == 8, "a lane shorter than eight appeared");
      ++octacycles;
    }
    expect(octacycles == 90, "expected ninety octacycles, got " +
                                 std::to_string(octacycles));
    auto laps = hamiltonian_cycles(levi.graph);
    expect(laps.size() == 144, "expected 144 full laps, got " +
                                   std::to_string(laps.size()));
    return "ninety octacycles; 144 full laps";
  });

  r.check(group, "totals", [&] {
    expect(sys.totals.size() == 6, "expected six totals");
    expect(sys.synthemes.size() == 15, "expected fifteen synthemes");
    expect(sys.duads.size() == 15, "expected fifteen duads");
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        sys.syntheme_shared_by(a, b);  // rejects pairs without a unique share
      }
    }
    std::vector<int> syntheme_uses(sys.synthemes.size(), 0);
    for (const auto& total : sys.totals) {
      for (int id : total) ++syntheme_uses[static_cast<std::size_t>(id)];
    }
    for (int uses : syntheme_uses) {
      expect(uses == 2, "a syntheme does not sit in exactly two totals");
    }
    std::vector<int> duad_uses(sys.duads.size(), 0);
    for (const auto& syntheme : sys.synthemes) {
      for (int id : syntheme) ++duad_uses[static_cast<std::size_t>(id)];
    }
    for (int uses : duad_uses) {
      expect(uses == 3, "a duad does not sit in exactly three synthemes");
    }
    return "six totals; total pairs share one syntheme; duads sit in three synthemes";
  });

  r.check(group, "letter tables", [&] {
    LetterTables tables = letter_tables(sys);
    // The duad table must be the inverse of the syntheme table: duad d
    // lies in the syntheme of letter pair lp exactly when lp shows up in
    // the letter synthemes of d.
    for (const auto& [letter_duad, syntheme] : tables.syntheme_of_letter_duad) {
      std::istringstream duads(syntheme);
      std::string duad;
      while (std::getline(duads, duad, ',')) {
        if (!duad.empty() && duad.front() == ' ') duad.erase(0, 1);
        bool found = false;
        for (const auto& [d, letters] : tables.letter_syntheme_of_duad) {
          if (d != duad) continue;
          found = letters.find(letter_duad) != std::string::npos;
        }
        expect(found, "tables disagree about duad " + duad + " and letters " +
                          letter_duad);
      }
    }
    r.artifact("letter_tables.txt", tables.text());
    return "duad table inverts the syntheme table";
  });

  r.check(group, "reference cycle", [&] {
    std::vector<int> ref = cycle_from_labels(levi, twelve_tone_reference_labels());
    expect(static_cast<int>(ref.size()) == levi.vertex_count(),
           "reference does not visit every vertex");
    return "pinned rim checks out";
  });

  std::vector<int> ref = cycle_from_labels(levi, twelve_tone_reference_labels());
  r.artifact("twelve_tone_census.csv",
             export_csv(CycleTable::from_cycles(levi.graph, all_cycles(levi.graph), ref)));
  r.artifact("duads_synthemes.json", export_json(sys.structure));
}

void verify_heptagon(Runner& r) {
  if (!r.wants("heptagon")) return;
  const std::string group = "heptagon";
  IncidenceStructure s = build_triad_seventh_heptagon(Scale::major(PitchClass(0)));
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "biregular", [&] {
    auto b = biregularity(levi);
    expect(b.type_tag() == "{7_2}", "expected a {7_2}, got " + b.type_tag());
    return "{7_2}: every triad in two sevenths, every seventh over two triads";
  });

  r.check(group, "single lane", [&] {
    auto cycles = all_cycles(levi.graph);
    expect(cycles.size() == 1 && cycles.front().size() == 14,
           "expected one lane through all fourteen chords");
    return "one fourteen-chord lane";
  });

  r.check(group, "containment", [&] {
    Scale scale = Scale::major(PitchClass(0));
    auto triads = triads_of_scale(scale);
    auto sevenths = sevenths_of_scale(scale);
    for (int i = 0; i < 7; ++i) {
      auto b = s.block_index(sevenths[static_cast<std::size_t>(i)].second.name());
      expect(b.has_value(), "missing seventh block");
      std::set<std::string> got;
      for (int p : s.block(*b).points) got.insert(s.point_label(p));
      std::set<std::string> want = {
          triads[static_cast<std::size_t>(i)].second.name(),
          triads[static_cast<std::size_t>((i + 2) % 7)].second.name()};
      expect(got == want, "the triads under " +
                              sevenths[static_cast<std::size_t>(i)].second.name() +
                              " are wrong");
      for (const auto& label : got) {
        Chord triad = Chord::parse(label);
        Chord seventh = sevenths[static_cast<std::size_t>(i)].second;
        auto triad_tones = triad.pitch_set();
        auto seventh_tones = seventh.pitch_set();
        expect(std::includes(seventh_tones.begin(), seventh_tones.end(),
                             triad_tones.begin(), triad_tones.end()),
               label + " is not contained in " + seventh.name());
      }
    }
    return "each seventh holds the triads on its own degree and two above";
  });
}

void verify_diatonic_clusters(Runner& r) {
  if (!r.wants("diatonic_clusters")) return;
  const std::string group = "diatonic_clusters";
  IncidenceStructure s = build_diatonic_cluster_tonnetz(Scale::major(PitchClass(0)));
  LeviGraph levi = levi_from_incidence(s);

  r.check(group, "configuration",
          [&] { return configuration_detail(levi, "{35_4}", 6); });
}

void verify_tripartite(Runner& r) {
  if (!r.wants("tripartite")) return;
  const std::string group = "tripartite";
  TripartiteTonnetz t = build_tripartite_tonnetz();

  r.check(group, "size and degrees", [&] {
    expect(t.graph.vertex_count() == 36, "expected thirty-six vertices");
    int degree_sum = 0;
    for (int v = 0; v < t.graph.vertex_count(); ++v) {
      expect(t.graph.degree(v) == 6,
             t.labels[static_cast<std::size_t>(v)] + " does not have six neighbors");
      degree_sum += t.graph.degree(v);
    }
    expect(degree_sum == 216, "expected 108 edges");
    return "thirty-six vertices of degree six, 108 edges";
  });

  r.check(group, "layers", [&] {
    using Part = TripartiteTonnetz::Part;
    std::set<std::pair<std::string, std::string>> pitch_major;
    std::set<std::pair<std::string, std::string>> pitch_minor;
    std::set<std::pair<std::string, std::string>> major_minor;
    for (int v = 0; v < t.graph.vertex_count(); ++v) {
      for (int w : t.graph.neighbors(v)) {
        if (w < v) continue;
        Part pv = t.part_of(v);
        Part pw = t.part_of(w);
        expect(pv != pw, "an edge stayed inside one class");
        const std::string& lv = t.labels[static_cast<std::size_t>(v)];
        const std::string& lw = t.labels[static_cast<std::size_t>(w)];
        if (pv == Part::pitch && pw == Part::major) pitch_major.insert({lv, lw});
        if (pv == Part::pitch && pw == Part::minor) pitch_minor.insert({lv, lw});
        if (pv == Part::major && pw == Part::minor) major_minor.insert({lv, lw});
      }
    }
    auto incidences = [](const IncidenceStructure& s, bool flip) {
      std::set<std::pair<std::string, std::string>> out;
      for (int b = 0; b < s.block_count(); ++b) {
        for (int p : s.block(b).points) {
          if (flip) {
            out.insert({s.block(b).label, s.point_label(p)});
          } else {
            out.insert({s.point_label(p), s.block(b).label});
          }
        }
      }
      return out;
    };
    // Pitch-to-triad structures keep triads as points and tones as blocks,
    // so the pairs flip around to (tone, triad).
    expect(pitch_major ==
               incidences(build_pitch_to_triad_tonnetz(ChordQuality::major), true),
           "pitch-major edges disagree with the major map");
    expect(pitch_minor ==
               incidences(build_pitch_to_triad_tonnetz(ChordQuality::minor), true),
           "pitch-minor edges disagree with the minor map");
    expect(major_minor == incidences(build_eulerian_tonnetz(), false),
           "major-minor edges disagree with the fused triads");
    return "all three layers agree with their pairwise structures";
  });
}

void verify_compositions(Runner& r) {
  if (!r.wants("compositions")) return;
  const std::string group = "compositions";

  r.check(group, "rim piece", [&] {
    Score score = compose_perimeter();
    expect(score.title == "On the Perimeter", "title changed");
    expect(score.events.size() == 30, "expected thirty events, got " +
                                          std::to_string(score.events.size()));
    for (const auto& event : score.events) {
      expect(event.tones.size() == 3, "an event is not a three-tone chord");
    }
    // Units repeat immediately, and consecutive arcs overlap in one chord.
    for (int unit = 0; unit < 5; ++unit) {
      for (int k = 0; k < 3; ++k) {
        expect(score.events[static_cast<std::size_t>(6 * unit + k)] ==
                   score.events[static_cast<std::size_t>(6 * unit + k + 3)],
               "a unit does not repeat verbatim");
      }
      const auto& last = score.events[static_cast<std::size_t>(6 * unit + 5)];
      const auto& next =
          score.events[static_cast<std::size_t>((6 * unit + 6) % 30)];
      expect(last == next, "consecutive arcs do not overlap in a chord");
    }
    r.artifact("on_the_perimeter.txt", score.text());
    r.artifact("on_the_perimeter.mid", export_midi(score));
    return "five overlapping arcs, each played twice: thirty chords";
  });

  r.check(group, "violin piece", [&] {
    Score plain = compose_decacycle(false);
    expect(plain.title == "Decacycle for Violin", "title changed");
    expect(!plain.pedal.has_value(), "the plain piece has no pedal");
    expect(plain.events.size() == 20, "expected twenty events, got " +
                                          std::to_string(plain.events.size()));
    for (const auto& event : plain.events) {
      expect(event.tones.size() == 2, "an event is not a dyad");
    }
    Score grounded = compose_decacycle(true);
    expect(grounded.pedal.has_value() && grounded.pedal->value() == 11,
           "the grounded piece should hold a B");
    expect(grounded.events == plain.events, "the pedal changed the line");
    r.artifact("decacycle_for_violin.txt", grounded.text());
    r.artifact("decacycle_for_violin.mid", export_midi(plain));
    r.artifact("decacycle_for_violin_pedal.mid", export_midi(grounded));
    return "ten stations unfold into twenty dyads; pedal optional";
  });
}

}  // namespace

VerificationRun run_verification(const std::string& only) {
  if (!only.empty()) {
    auto groups = verification_groups();
    if (std::find(groups.begin(), groups.end(), only) == groups.end()) {
      std::string known;
      for (const auto& group : groups) {
        if (!known.empty()) known += ", ";
        known += group;
      }
      fail("unknown check group " + only + "; known groups: " + known);
    }
  }
  Runner runner(only);
  verify_eulerian(runner);
  verify_pitch_class_graph(runner);
  verify_triad_family(runner);
  verify_pitch_to_triad(runner, ChordQuality::major);
  verify_pitch_to_triad(runner, ChordQuality::minor);
  verify_diatonic_triads(runner);
  verify_diatonic_sevenths(runner);
  verify_pentatonic(runner);
  verify_odd_scale(runner);
  verify_duads_synthemes(runner);
  verify_heptagon(runner);
  verify_diatonic_clusters(runner);
  verify_tripartite(runner);
  verify_compositions(runner);
  return std::move(runner.run);
}

}  // namespace tonnetz
