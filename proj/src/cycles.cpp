#include "tonnetz/cycles.hpp"

#include <algorithm>
#include <sstream>

#include "tonnetz/errors.hpp"

namespace tonnetz {
namespace {

struct CycleSearch {
  CycleSearch(const Graph& graph, bool hamiltonian, int limit = 0)
      : g(graph), hamiltonian_only(hamiltonian), max_length(limit) {}

  const Graph& g;
  bool hamiltonian_only;
  int max_length;
  std::vector<std::vector<int>> found;
  std::vector<int> path;
  std::uint64_t used = 0;
  int anchor = 0;

  void run() {
    int n = g.vertex_count();
    if (n > 64) fail("cycle enumeration supports at most 64 vertices");
    int last_anchor = hamiltonian_only ? 0 : n - 1;
    for (anchor = 0; anchor <= last_anchor && anchor < n; ++anchor) {
      path.assign(1, anchor);
      used = std::uint64_t{1} << anchor;
      extend();
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
  }

  void extend() {
    int u = path.back();
    for (int w : g.neighbors(u)) {
      if (w == anchor) {
        if (path.size() >= 3 && path[1] < u) {
          if (!hamiltonian_only || path.size() == static_cast<std::size_t>(g.vertex_count())) {
            found.push_back(path);
          }
        }
        continue;
      }
      if (w < anchor || (used >> w) & 1) continue;
      if (max_length > 0 && path.size() >= static_cast<std::size_t>(max_length)) continue;
      path.push_back(w);
      used |= std::uint64_t{1} << w;
      extend();
      used &= ~(std::uint64_t{1} << w);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<int>> all_cycles(const Graph& g, int max_length) {
  CycleSearch search(g, false, max_length);
  search.run();
  return std::move(search.found);
}

std::vector<std::vector<int>> hamiltonian_cycles(const Graph& g) {
  CycleSearch search(g, true);
  search.run();
  return std::move(search.found);
}

EdgeIndex::EdgeIndex(const Graph& g) {
  auto edges = g.edges();
  if (edges.size() > 128) fail("edge masks support at most 128 edges");
  for (const auto& e : edges) {
    int id = static_cast<int>(index_.size());
    index_[e] = id;
  }
}

int EdgeIndex::index_of(int u, int v) const {
  auto key = std::minmax(u, v);
  auto it = index_.find({key.first, key.second});
  if (it == index_.end()) {
    fail("no edge between vertices " + std::to_string(u) + " and " + std::to_string(v));
  }
  return it->second;
}

std::bitset<128> EdgeIndex::mask_of(const std::vector<int>& cycle) const {
  if (cycle.size() < 3) fail("a cycle needs at least 3 vertices");
  std::bitset<128> mask;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    mask.set(static_cast<std::size_t>(
        index_of(cycle[i], cycle[(i + 1) % cycle.size()])));
  }
  return mask;
}

int deviation(const std::bitset<128>& cycle_edges, const std::bitset<128>& reference_edges) {
  return static_cast<int>((cycle_edges & ~reference_edges).count());
}

namespace {

void trim_row(std::vector<long long>& row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
}

CycleTable table_from_length_masks(
    const std::vector<std::pair<int, std::bitset<128>>>& cycles,
    const std::bitset<128>& reference) {
  std::map<int, std::vector<long long>> rows;
  for (const auto& [length, mask] : cycles) {
    int p = deviation(mask, reference);
    auto& row = rows[length];
    if (row.size() <= static_cast<std::size_t>(p)) row.resize(static_cast<std::size_t>(p) + 1, 0);
    ++row[static_cast<std::size_t>(p)];
  }
  return CycleTable::from_rows(std::move(rows));
}

}  // namespace

CycleTable CycleTable::from_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                                   const std::vector<int>& reference) {
  EdgeIndex index(g);
  std::vector<std::pair<int, std::bitset<128>>> length_masks;
  length_masks.reserve(cycles.size());
  for (const auto& c : cycles) {
    length_masks.push_back({static_cast<int>(c.size()), index.mask_of(c)});
  }
  return table_from_length_masks(length_masks, index.mask_of(reference));
}

CycleTable CycleTable::from_rows(std::map<int, std::vector<long long>> rows) {
  CycleTable table;
  for (auto& [length, row] : rows) {
    trim_row(row);
    if (!row.empty()) table.rows_[length] = std::move(row);
  }
  return table;
}

long long CycleTable::total() const {
  long long sum = 0;
  for (const auto& [length, row] : rows_) {
    for (long long c : row) sum += c;
  }
  return sum;
}

long long CycleTable::row_total(int length) const {
  auto it = rows_.find(length);
  if (it == rows_.end()) return 0;
  long long sum = 0;
  for (long long c : it->second) sum += c;
  return sum;
}

int CycleTable::max_deviation() const {
  int best = 0;
  for (const auto& [length, row] : rows_) {
    best = std::max(best, static_cast<int>(row.size()) - 1);
  }
  return best;
}

std::vector<long long> CycleTable::padded_row(int length) const {
  std::vector<long long> row;
  if (auto it = rows_.find(length); it != rows_.end()) row = it->second;
  row.resize(static_cast<std::size_t>(max_deviation()) + 1, 0);
  return row;
}

std::string CycleTable::csv() const {
  std::ostringstream out;
  int width = max_deviation() + 1;
  out << "length";
  for (int p = 0; p < width; ++p) out << ",p" << p;
  out << ",total\n";
  std::vector<long long> column_sums(static_cast<std::size_t>(width), 0);
  for (const auto& [length, row] : rows_) {
    auto padded = padded_row(length);
    out << length;
    long long row_sum = 0;
    for (int p = 0; p < width; ++p) {
      out << ',' << padded[static_cast<std::size_t>(p)];
      column_sums[static_cast<std::size_t>(p)] += padded[static_cast<std::size_t>(p)];
      row_sum += padded[static_cast<std::size_t>(p)];
    }
    out << ',' << row_sum << '\n';
  }
  out << "total";
  long long grand = 0;
  for (int p = 0; p < width; ++p) {
    out << ',' << column_sums[static_cast<std::size_t>(p)];
    grand += column_sums[static_cast<std::size_t>(p)];
  }
  out << ',' << grand << '\n';
  return out.str();
}

std::optional<std::vector<int>> find_reference_hamiltonian(const Graph& g,
                                                           const CycleTable& want) {
  auto cycles = all_cycles(g);

  std::map<int, long long> length_histogram;
  for (const auto& c : cycles) ++length_histogram[static_cast<int>(c.size())];
  for (const auto& [length, row] : want.rows()) {
    if (length_histogram[length] != want.row_total(length)) return std::nullopt;
  }
  long long table_total = want.total();
  long long cycle_total = static_cast<long long>(cycles.size());
  if (table_total != cycle_total) return std::nullopt;

  EdgeIndex index(g);
  std::vector<std::pair<int, std::bitset<128>>> length_masks;
  length_masks.reserve(cycles.size());
  for (const auto& c : cycles) {
    length_masks.push_back({static_cast<int>(c.size()), index.mask_of(c)});
  }

  for (const auto& candidate : hamiltonian_cycles(g)) {
    if (table_from_length_masks(length_masks, index.mask_of(candidate)) == want) {
      return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace tonnetz
