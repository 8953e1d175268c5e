#pragma once

#include <cstdint>
#include <vector>

#include "elimtree/elim_forest.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/peo_graph.hpp"
#include "elimtree/rotation.hpp"

namespace elimtree {

/// Counters of elementary operations: array reads and writes in the selection
/// logic, children inspected by a rotation, and vertices walked while building
/// insertion paths.
struct OpCounter {
  std::uint64_t total = 0;
  std::uint64_t last_step = 0;
  std::uint64_t max_step = 0;

  void finish_step(std::uint64_t ops) {
    total += ops;
    last_step = ops;
    if (ops > max_step) max_step = ops;
  }
};

/// Generates all elimination forests of a PEO graph without remembering
/// visited ones, with amortized cost proportional to the largest induced star.
///
/// The generator starts at initial_forest(pg); each successful next() moves
/// to the following forest by a single rotation.
class HistoryFreeGenerator {
 public:
  explicit HistoryFreeGenerator(const PeoGraph& pg);

  const ElimForest& current() const noexcept { return f_; }
  /// False once every forest has been produced.
  bool next();
  Step last_step() const noexcept { return last_; }
  const OpCounter& ops() const noexcept { return ops_; }

  /// Direction the vertex will move when selected next.
  Direction direction(Vertex j) const { return o_[static_cast<std::size_t>(j)]; }

 private:
  const PeoGraph* pg_;
  ElimForest f_;
  std::vector<Direction> o_;
  std::vector<Vertex> s_;
  std::vector<int> q_;
  std::vector<std::vector<Vertex>> paths_;
  PathScratch scratch_;
  Step last_;
  OpCounter ops_;
  bool done_ = false;
};

}  // namespace elimtree
