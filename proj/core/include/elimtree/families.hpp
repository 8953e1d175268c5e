#pragma once

#include <cstdint>

#include "elimtree/graph.hpp"

namespace elimtree {

Graph complete_graph(int n);
/// Path 1-2-...-n.
Graph path_graph(int n);
/// Centre 1, leaves 2..n.
Graph star_graph(int n);
/// k disjoint edges {i, k+i}.
Graph matching_graph(int k);
/// matching_graph(k) plus a clique on 2k+1..3k.
Graph matching_plus_clique_graph(int k);
/// Cycle 1-2-...-n-1.
Graph cycle_graph(int n);

/// Random recursive tree: vertex v > 1 attaches to a uniform earlier vertex,
/// so 1..n is a PEO.
Graph random_tree(int n, std::uint64_t seed);

/// Random connected chordal graph: vertex v > 1 picks a random earlier vertex
/// u and joins a random non-empty subset, of size at most k, of the clique
/// formed by u and its earlier neighbours. The identity stays a PEO unless
/// `shuffle` relabels the vertices at random.
Graph random_chordal(int n, int k, std::uint64_t seed, bool shuffle = false);

}  // namespace elimtree
