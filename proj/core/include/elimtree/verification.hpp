#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "elimtree/elim_forest.hpp"
#include "elimtree/peo_graph.hpp"

namespace elimtree {

/// Largest forest count the brute-force oracles agree to materialize.
inline constexpr std::uint64_t kOracleGuard = 10'000'000;

class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Every elimination forest of g, built by choosing a root per component and
/// recursing; sorted by canonical key.
std::vector<ElimForest> enumerate_all(const Graph& g, std::uint64_t guard = kOracleGuard);

/// Forests as vertices, single rotations as edges.
struct FlipGraph {
  std::vector<std::string> keys;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> adj;

  std::size_t size() const noexcept { return keys.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const;
  /// Common degree of all vertices, or -1 when irregular.
  int regular_degree() const;
};

FlipGraph build_flip_graph(const Graph& g, std::uint64_t guard = kOracleGuard);

/// True iff b arises from a by rotating one tree edge.
bool are_rotation_adjacent(const Graph& g, const ElimForest& a, const ElimForest& b);

struct GrayCodeReport {
  std::size_t length = 0;
  std::size_t expected = 0;
  bool all_valid = false;
  bool distinct = false;
  bool consecutive_adjacent = false;
  bool complete = false;
  bool cyclic = false;
  /// Checks 1-4; cyclicity is informational.
  bool passed() const noexcept { return all_valid && distinct && consecutive_adjacent && complete; }
};

GrayCodeReport verify_gray_code(const Graph& g, std::span<const ElimForest> seq, std::uint64_t guard = kOracleGuard);

using Permutation = std::vector<Vertex>;

/// sigma images of all forests of pg.
std::vector<Permutation> permutation_language(const PeoGraph& pg, std::uint64_t guard = kOracleGuard);

/// Greedy minimal jumps of the largest possible value over the materialized
/// language, starting at the identity.
std::vector<Permutation> algorithm_j(const PeoGraph& pg, std::uint64_t guard = kOracleGuard);

struct ZigzagLevel {
  int nu = 0;
  bool projection = false;  ///< removing nu maps the level onto the previous one
  bool z1 = false;          ///< nu at the front and at the back of every previous word
  bool z2 = false;          ///< nu only ever at the back
  bool ok() const noexcept { return projection && (z1 || z2); }
};

std::vector<ZigzagLevel> zigzag_levels(const PeoGraph& pg, std::uint64_t guard = kOracleGuard);
bool check_zigzag_closure(const PeoGraph& pg, std::uint64_t guard = kOracleGuard);

/// Clean rotations {i,j}, i<j, mapped through sigma coincide with clean
/// minimal jumps of j, and every minimal jump maps to a rotation.
bool check_jump_rotation_correspondence(const PeoGraph& pg, std::uint64_t guard = kOracleGuard);

enum class SearchOutcome { found, not_found, inconclusive };

struct HamiltonResult {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::vector<std::size_t> cycle;
  std::uint64_t expansions = 0;
};

/// Backtracking search with a fewest-options-first heuristic, giving up after
/// `budget` node expansions.
HamiltonResult find_hamilton_cycle(const FlipGraph& fg, std::uint64_t budget = 50'000'000);

/// Graphviz text; `labels` (optional) replaces the keys as node labels and
/// consecutive entries of `path` (keys) are drawn bold.
std::string flip_graph_dot(const FlipGraph& fg, const std::vector<std::string>& labels = {},
                           const std::vector<std::string>& path = {});

}  // namespace elimtree
