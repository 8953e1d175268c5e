#pragma once

#include <vector>

#include "elimtree/history_free.hpp"

namespace elimtree {

/// Static direction matrix and dynamic child-by-direction matrix used by the
/// constant-time tree rotation.
class TreeRotationTables {
 public:
  TreeRotationTables() = default;
  /// Throws GraphError if g is not a tree.
  explicit TreeRotationTables(const Graph& g);

  int size() const noexcept { return n_; }
  /// Neighbour of i on the unique path towards j (0 when i == j).
  Vertex beta(Vertex i, Vertex j) const { return beta_[at(i, j)]; }
  /// Current child of i in the direction of its neighbour a, or 0.
  Vertex gamma(Vertex i, Vertex a) const { return gamma_[at(i, a)]; }
  void set_gamma(Vertex i, Vertex a, Vertex child) { gamma_[at(i, a)] = child; }

  /// Rebuilds gamma from scratch for forest f.
  void reset_gamma(const ElimForest& f);
  /// True iff gamma agrees with a full recomputation from f.
  bool gamma_consistent(const ElimForest& f) const;

 private:
  std::size_t at(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<Vertex> beta_;
  std::vector<Vertex> gamma_;
};

/// Loopless generator for trees: the same sequence as HistoryFreeGenerator,
/// with a bounded number of elementary operations per step.
class LooplessTreeGenerator {
 public:
  explicit LooplessTreeGenerator(const PeoGraph& pg);

  const ElimForest& current() const noexcept { return f_; }
  bool next();
  Step last_step() const noexcept { return last_; }
  const OpCounter& ops() const noexcept { return ops_; }
  const TreeRotationTables& tables() const noexcept { return tables_; }

 private:
  /// Rotates the edge between x and its parent; returns operations used.
  std::uint64_t rotate_up(Vertex x);

  const PeoGraph* pg_;
  ElimForest f_;
  TreeRotationTables tables_;
  std::vector<Direction> o_;
  std::vector<Vertex> s_;
  Step last_;
  OpCounter ops_;
  bool done_ = false;
};

}  // namespace elimtree
