#include "elimtree/algorithm_r.hpp"

#include <unordered_set>

#include "elimtree/analysis.hpp"

namespace elimtree {

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::exhausted: return "exhausted";
    case Termination::ambiguous: return "ambiguous";
    case Termination::stuck: return "stuck";
  }
  return "unknown";
}

RunReport run_algorithm_r(const Graph& g, const ElimForest& f0, const RunOptions& options) {
  if (!validate(g, f0)) throw ForestError("initial forest is not an elimination forest of the graph");
  const int n = g.size();
  RunReport report;
  std::unordered_set<std::string> seen;
  ElimForest current = f0;
  seen.insert(canonical_key(current));
  report.visited.push_back(current);

  struct Candidate {
    ElimForest forest;
    std::string key;
    Step step;
  };
  std::vector<Candidate> fresh;
  bool finished = false;
  while (!finished) {
    if (options.limit != 0 && report.visited.size() >= options.limit) {
      report.termination = Termination::stuck;
      return report;
    }
    bool moved = false;
    for (Vertex j = n; j >= 2 && !moved; --j) {
      fresh.clear();
      auto consider = [&](Vertex upper, Vertex lower, Direction dir) {
        auto next = rotate_edge_generic(g, current, upper, lower);
        auto key = canonical_key(next);
        if (!seen.contains(key)) fresh.push_back({std::move(next), std::move(key), {j, dir}});
      };
      const Vertex p = current.parent(j);
      if (p != 0 && p < j) consider(p, j, Direction::up);
      const int smaller = current.smaller_child_count(j);
      if (smaller == 1 || (smaller > 1 && options.policy == DownRotationPolicy::all_smaller_children))
        for (Vertex c = current.first_child(j); c != 0; c = current.next_sibling(c))
          if (c < j) consider(j, c, Direction::down);
      if (fresh.size() > 1) {
        report.termination = Termination::ambiguous;
        return report;
      }
      if (fresh.size() == 1) {
        auto& chosen = fresh.front();
        seen.insert(chosen.key);
        current = std::move(chosen.forest);
        report.visited.push_back(current);
        report.steps.push_back(chosen.step);
        (chosen.step.dir == Direction::up ? report.up_rotations : report.down_rotations) += 1;
        moved = true;
      }
    }
    finished = !moved;
  }
  report.termination = Termination::stuck;
  if (n <= kMaxCountVertices && count_forests(g) == report.visited.size()) report.termination = Termination::exhausted;
  return report;
}

}  // namespace elimtree
