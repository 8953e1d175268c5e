#pragma once

#include <vector>

#include "elimtree/elim_forest.hpp"
#include "elimtree/peo_graph.hpp"

namespace elimtree {

/// Forests below operate on the prefix graph G^[nu] of a PEO graph, with
/// nu = f.size() (deletion) or f.size() + 1 (insertion); larger vertices of
/// pg are ignored.

/// p(F): removes the largest vertex nu. Throws ForestError if nu has two or more children.
ElimForest delete_max(const PeoGraph& pg, const ElimForest& f);

/// Root-to-deepest path through the neighbours of nu = f.size() + 1 that are
/// smaller than nu. Empty when nu has no such neighbour.
std::vector<Vertex> insertion_path(const PeoGraph& pg, const ElimForest& f);

/// Reusable scratch space for insertion_path_of; all-zero between calls.
struct PathScratch {
  explicit PathScratch(int n = 0) : down(static_cast<std::size_t>(n) + 1, 0), mark(static_cast<std::size_t>(n) + 1, 0) {}
  std::vector<Vertex> down;
  std::vector<char> mark;
};

/// Insertion path of j in f with every vertex larger than j ignored. Upward
/// walks from the smaller neighbours of j stop at j, at a root, or at a vertex
/// met before, so the cost is linear in the path length. j may be present in
/// f (sitting above the path) or absent. Result is written to `out`; the
/// return value counts the vertices visited by the walks.
std::size_t insertion_path_of(const PeoGraph& pg, const ElimForest& f, Vertex j, PathScratch& scratch,
                       std::vector<Vertex>& out);

/// c_i(F) for 1 <= i <= lambda + 1.
ElimForest insert_at(const PeoGraph& pg, const ElimForest& f, int i);

/// The representative permutation of f.
std::vector<Vertex> sigma_encode(const PeoGraph& pg, const ElimForest& f);
/// Inverse of sigma_encode: the forest with removal order perm.
ElimForest sigma_decode(const PeoGraph& pg, std::span<const Vertex> perm);

}  // namespace elimtree
