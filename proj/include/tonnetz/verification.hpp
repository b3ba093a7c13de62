#pragma once

#include <map>
#include <string>
#include <vector>

#include "tonnetz/catalog.hpp"
#include "tonnetz/incidence.hpp"
#include "tonnetz/music.hpp"

namespace tonnetz {

/// Options shared by every structure builder; each builder reads only the
/// fields it cares about.
struct StructureOptions {
  Scale scale = Scale::major(PitchClass(0));
  std::vector<std::string> pentatonic_tones = {"C", "D", "E", "G", "A"};
  Scale hexachord = default_hexachord();
  int odd_size = 7;
};

/// Catalog entries the command line and the verifier can build by name.
std::vector<std::string> structure_names();

/// Builds a catalog structure by name; unknown names list the known ones.
IncidenceStructure build_structure(const std::string& name,
                                   const StructureOptions& options = {});

/// The pinned deviation reference of a structure, for the structures that
/// define one; the rest are rejected by name.
std::vector<std::string> reference_labels(const std::string& name,
                                          const StructureOptions& options = {});

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationRun {
  std::vector<CheckResult> checks;
  /// Deterministic export bundle: file name -> bytes.
  std::map<std::string, std::string> artifacts;

  bool all_passed() const;
  int passed_count() const;
  /// One line per check, then the artifact inventory, then a summary.
  std::string report() const;
};

/// Names of the check groups, in running order.
std::vector<std::string> verification_groups();

/// Runs the invariant suite over the whole catalog, or over one group
/// when `only` is nonempty. Every byte of the result is a deterministic
/// function of the library itself.
VerificationRun run_verification(const std::string& only = "");

}  // namespace tonnetz
