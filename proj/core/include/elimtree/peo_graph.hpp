#pragma once

#include <span>
#include <vector>

#include "elimtree/graph.hpp"

namespace elimtree {

/// Raised when an ordering handed in as a PEO is not one.
class NotPeoError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// A graph whose labelling 1..n is a certified perfect elimination ordering,
/// plus the per-vertex metadata the generators need.
class PeoGraph {
 public:
  PeoGraph() = default;

  /// Certifies that 1..n is already a PEO of g; throws NotPeoError otherwise.
  explicit PeoGraph(Graph g);

  const Graph& graph() const noexcept { return g_; }
  int size() const noexcept { return g_.size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }

  /// Neighbours smaller than v, increasing.
  std::span<const Vertex> lower_neighbors(Vertex v) const {
    const auto& nb = g_.neighbors(v);
    return {nb.data(), static_cast<std::size_t>(lower_count_[static_cast<std::size_t>(v)])};
  }

  /// v is not the smallest vertex of its component.
  bool rotatable(Vertex v) const { return lower_count_[static_cast<std::size_t>(v)] > 0; }
  /// Next smaller rotatable vertex, or 1.
  Vertex alpha(Vertex v) const { return alpha_[static_cast<std::size_t>(v)]; }
  /// Largest rotatable vertex, 0 when there is none.
  Vertex rho() const noexcept { return rho_; }
  int sigma_star() const noexcept { return sigma_; }

  /// Translation between the certified labels and the caller's labels.
  Vertex original_label(Vertex v) const { return to_original_[static_cast<std::size_t>(v)]; }
  Vertex peo_label(Vertex original) const { return to_peo_[static_cast<std::size_t>(original)]; }

  /// The graph restricted to vertices 1..nu, still certified.
  PeoGraph prefix(int nu) const;

 private:
  friend PeoGraph relabel_to_peo(const Graph& g, std::span<const Vertex> order);
  void compute_metadata();

  Graph g_;
  std::vector<int> lower_count_;
  std::vector<Vertex> alpha_;
  Vertex rho_ = 0;
  int sigma_ = 0;
  std::vector<Vertex> to_original_;
  std::vector<Vertex> to_peo_;
};

/// Renames order[k] to k+1 so that the identity becomes the given PEO.
PeoGraph relabel_to_peo(const Graph& g, std::span<const Vertex> order);

/// The identity labelling when it already is a PEO, otherwise the Lex-BFS one.
/// Throws NotPeoError for non-chordal input.
PeoGraph certify(const Graph& g);

}  // namespace elimtree
