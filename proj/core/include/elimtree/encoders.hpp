#pragma once

#include <string>
#include <vector>

#include "elimtree/elim_forest.hpp"

namespace elimtree {

enum class Shape { complete, path, star, matching, matching_plus_clique, generic };

const char* shape_name(Shape shape);

/// Result of shape detection. `to_canonical[v]` is the label of original
/// vertex v in the canonical labelling of the shape; `param` is the number of
/// vertices (complete, path, star) or of matching edges.
struct ShapeTag {
  Shape shape = Shape::generic;
  int param = 0;
  std::vector<Vertex> to_canonical;

  /// The graph in canonical labels.
  Graph canonical_graph(const Graph& g) const { return g.relabeled(to_canonical); }
};

/// First shape that matches, in the order complete, path, star, matching,
/// matching-plus-clique. Canonical labellings: a path runs 1..n, a star has
/// centre 1, matching edges are {i, k+i}, and the extra clique is 2k+1..3k.
/// When the input already carries the canonical labelling it is kept.
ShapeTag detect_shape(const Graph& g);

/// Object string of f, which must be given in canonical labels:
///  complete - permutation read from the root down, e.g. "213";
///  path     - binary tree "v(L,R)" with "." for an empty subtree, smaller child left;
///  star     - partial permutation, handle labels minus one, "ε" when empty;
///  matching - bitstring, bit i is 1 iff k+i is a root;
///  matching_plus_clique - signed permutation such as "+2-1".
/// Sequences over values up to 9 are written without separators, larger ones
/// comma-separated. Throws ForestError when f does not fit the tag.
std::string encode(const ShapeTag& tag, const ElimForest& f);

/// Objects of the rotation Gray code of g, generated in canonical labels.
/// Throws GraphError for generic shapes.
std::vector<std::string> gray_code(const Graph& g);

}  // namespace elimtree
