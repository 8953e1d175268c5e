#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "elimtree/elim_forest.hpp"
#include "elimtree/peo_graph.hpp"

namespace elimtree {

enum class Direction { up, down };

/// A rotation named by its larger endpoint and the direction that vertex moves.
struct Step {
  Vertex vertex = 0;
  Direction dir = Direction::up;
  friend bool operator==(const Step&, const Step&) = default;
};

/// "4\u2191" / "4\u2193" style annotation (UTF-8 arrows).
std::string format_step(const Step& step);

/// Rotates the tree edge {i, j} where i is the parent of j, deciding by an
/// explicit component search which subtrees of j move to i.
ElimForest rotate_edge_generic(const Graph& g, const ElimForest& f, Vertex i, Vertex j);
/// In-place variant. Both throw ForestError if i is not the parent of j.
void rotate_edge_generic_inplace(const Graph& g, ElimForest& f, Vertex i, Vertex j);

/// Up-rotation of j using the adjacency rule alone. Requires j to have a
/// parent smaller than j and the configuration to be clean for j (see
/// is_clean_for).
/// Returns the number of children inspected.
std::size_t rotate_up_fast(const PeoGraph& pg, ElimForest& f, Vertex j);

/// Down-rotation of j into its unique smaller child i. `path_next` is the
/// vertex following i on j's insertion path, or 0 when i is its last vertex.
std::size_t rotate_down_fast(const PeoGraph& pg, ElimForest& f, Vertex j, Vertex path_next);

/// Convenience wrapper: the down case recomputes the insertion path.
/// Throws ForestError when the rotation does not exist.
ElimForest rotate_fast(const PeoGraph& pg, const ElimForest& f, Vertex j, Direction dir);

}  // namespace elimtree
