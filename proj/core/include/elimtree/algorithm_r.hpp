#pragma once

#include <cstddef>
#include <vector>

#include "elimtree/elim_forest.hpp"
#include "elimtree/rotation.hpp"

namespace elimtree {

enum class Termination { exhausted, ambiguous, stuck };

const char* termination_name(Termination t);

/// Which down-rotations of a vertex the greedy run looks at.
enum class DownRotationPolicy {
  /// Only when the vertex has exactly one smaller child.
  unique_smaller_child_only,
  /// Every edge to a smaller child is a candidate; several of them leading
  /// to unvisited forests count as an ambiguity.
  all_smaller_children,
};

struct RunOptions {
  DownRotationPolicy policy = DownRotationPolicy::all_smaller_children;
  /// Stop after this many forests (0 = no limit); termination is then `stuck`.
  std::size_t limit = 0;
};

struct RunReport {
  std::vector<ElimForest> visited;
  /// steps[t] turns visited[t] into visited[t + 1].
  std::vector<Step> steps;
  Termination termination = Termination::stuck;
  std::size_t up_rotations = 0;
  std::size_t down_rotations = 0;
};

/// Greedy rotation run with a history set. Works on any graph; the result is
/// `exhausted` when it stopped with nothing left to visit and the visited
/// count equals the number of elimination forests of g.
RunReport run_algorithm_r(const Graph& g, const ElimForest& f0, const RunOptions& options = {});

}  // namespace elimtree
