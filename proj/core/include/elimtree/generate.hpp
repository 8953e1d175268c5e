#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "elimtree/elim_forest.hpp"
#include "elimtree/peo_graph.hpp"
#include "elimtree/rotation.hpp"

namespace elimtree {

enum class Engine { automatic, history_free, loopless };

/// Receives each forest (a view into generator state, copy to keep it) and the
/// rotation that produced it (nullptr for the first). Return false to stop.
using ForestVisitor = std::function<bool(const ElimForest&, const Step*)>;

struct GenerationStats {
  std::uint64_t forests = 0;
  std::uint64_t total_ops = 0;
  std::uint64_t max_step_ops = 0;
  bool complete = false;
};

/// Streams all elimination forests of pg; `automatic` picks the loopless
/// engine for trees and the history-free one otherwise.
GenerationStats generate_all(const PeoGraph& pg, const ForestVisitor& visit, Engine engine = Engine::automatic);

/// Materialized run.
std::vector<ElimForest> generate_list(const PeoGraph& pg, Engine engine = Engine::automatic);

}  // namespace elimtree
