#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elimtree {

/// Vertices are 1-based; 0 is the "no vertex" / virtual-root sentinel.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Practical ceiling for the dense adjacency matrix.
inline constexpr int kMaxVertices = 1 << 15;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind { malformed, vertex_out_of_range, duplicate_edge, self_loop };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what);
  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Undirected simple graph on vertices 1..n.
///
/// Both an n-by-n adjacency bit matrix and sorted adjacency lists are kept,
/// so adjacency queries are O(1) and neighbourhood scans are O(deg).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);

  int size() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    const auto bit = static_cast<std::size_t>(v);
    return (adj_[static_cast<std::size_t>(u) * stride_ + (bit >> 6)] >> (bit & 63)) & 1U;
  }

  /// Neighbours of v in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to new_label[v] (new_label[0] is ignored).
  Graph relabeled(std::span<const Vertex> new_label) const;

  /// Subgraph induced by the first nu vertices.
  Graph prefix(int nu) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::size_t stride_ = 1;  // 64-bit words per matrix row
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

/// Parses the edge-list format: "n m", then m lines "u v"; '#' starts a comment line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

/// Lexicographic BFS from vertex 1, ties broken towards the smallest label.
/// The returned visit order has the property that, for chordal g, every
/// vertex's earlier neighbours form a clique.
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// True iff every vertex's earlier neighbours in `order` form a clique.
/// Throws GraphError if `order` is not a permutation of 1..n.
bool is_peo(const Graph& g, std::span<const Vertex> order);

/// A perfect elimination ordering when g is chordal.
std::optional<std::vector<Vertex>> chordal_peo(const Graph& g);

inline bool is_chordal(const Graph& g) { return chordal_peo(g).has_value(); }

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_2_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Every edge {i,k}, i<k, implies {i,j} and {j,k} for all i<j<k.
bool is_filled(const Graph& g);

struct StarNumber {
  int value = 0;
  bool exact = true;
};

/// Number of edges of the largest induced star.
StarNumber max_star_sigma(const Graph& g);

}  // namespace elimtree
