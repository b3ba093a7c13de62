#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tonnetz/graph.hpp"

namespace tonnetz {

/// Every simple cycle of the graph, each reported once in canonical
/// orientation (least vertex first, lesser neighbor second), sorted by
/// length then lexicographically. Guards against more than 64 vertices.
/// A positive max_length prunes the search to cycles of at most that
/// many vertices; zero enumerates everything.
std::vector<std::vector<int>> all_cycles(const Graph& g, int max_length = 0);

/// The cycles that visit every vertex exactly once, same conventions.
std::vector<std::vector<int>> hamiltonian_cycles(const Graph& g);

/// Stable edge numbering for a graph with at most 128 edges, used to
/// turn cycles into edge membership masks.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);
  int edge_count() const { return static_cast<int>(index_.size()); }
  int index_of(int u, int v) const;
  std::bitset<128> mask_of(const std::vector<int>& cycle) const;

 private:
  std::map<std::pair<int, int>, int> index_;
};

/// Number of edges of the cycle that leave the reference cycle.
int deviation(const std::bitset<128>& cycle_edges, const std::bitset<128>& reference_edges);

/// Histogram of a cycle collection by length and by deviation from a
/// reference cycle.
class CycleTable {
 public:
  static CycleTable from_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                                const std::vector<int>& reference);
  static CycleTable from_rows(std::map<int, std::vector<long long>> rows);

  /// length -> counts indexed by deviation, trailing zeros trimmed.
  const std::map<int, std::vector<long long>>& rows() const { return rows_; }
  long long total() const;
  long long row_total(int length) const;
  /// Largest deviation with a nonzero count anywhere in the table.
  int max_deviation() const;
  /// Counts for one length, padded with zeros to max_deviation() + 1.
  std::vector<long long> padded_row(int length) const;

  /// Columns length, p0..pK, total; a closing total row sums each column.
  std::string csv() const;

  bool operator==(const CycleTable&) const = default;

 private:
  std::map<int, std::vector<long long>> rows_;
};

/// Searches the graph's Hamiltonian cycles in enumeration order for one
/// whose deviation table reproduces the given table. The cycle length
/// histogram is reference independent, so mismatched row totals abort
/// the search before any candidate is tried.
std::optional<std::vector<int>> find_reference_hamiltonian(const Graph& g,
                                                           const CycleTable& want);

}  // namespace tonnetz
