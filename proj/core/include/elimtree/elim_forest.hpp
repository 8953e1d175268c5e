#pragma once

#include <span>
#include <string>
#include <vector>

#include "elimtree/graph.hpp"

namespace elimtree {

class ForestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rooted forest on 1..n. Vertex 0 is a virtual super-root whose children
/// are the roots. Children are kept in intrusive sibling lists so linking
/// and unlinking are O(1); their order carries no meaning.
///
/// For every vertex the number of children smaller than it and the XOR of
/// those children are cached, which yields the unique smaller child in O(1)
/// whenever there is exactly one.
class ElimForest {
 public:
  ElimForest() : ElimForest(0) {}
  /// n isolated roots.
  explicit ElimForest(int n);
  /// From a parent array indexed 1..n (entry 0 ignored); throws ForestError on cycles.
  static ElimForest from_parents(std::span<const Vertex> parent);

  int size() const noexcept { return n_; }
  Vertex parent(Vertex v) const { return parent_[idx(v)]; }
  bool is_root(Vertex v) const { return parent_[idx(v)] == 0; }
  bool is_leaf(Vertex v) const { return first_[idx(v)] == 0; }
  Vertex first_child(Vertex v) const { return first_[idx(v)]; }
  Vertex next_sibling(Vertex v) const { return next_[idx(v)]; }
  int child_count(Vertex v) const { return count_[idx(v)]; }
  std::vector<Vertex> children(Vertex v) const;
  std::vector<Vertex> roots() const { return children(0); }

  int smaller_child_count(Vertex v) const { return smaller_count_[idx(v)]; }
  /// The unique child smaller than v, or 0 when there is none or several.
  Vertex smaller_child(Vertex v) const { return smaller_count_[idx(v)] == 1 ? smaller_xor_[idx(v)] : 0; }

  /// Detaches v (with its subtree) from its parent; v is left parentless and
  /// not listed as a root until linked again.
  void unlink(Vertex v);
  /// Attaches a detached v under p (p = 0 makes v a root).
  void link(Vertex v, Vertex p);

  /// Parent array 1..n (index 0 holds 0).
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  /// All vertices of the subtree rooted at v, preorder.
  std::vector<Vertex> subtree(Vertex v) const;
  bool is_ancestor(Vertex a, Vertex v) const;

  friend bool operator==(const ElimForest& a, const ElimForest& b) { return a.parent_ == b.parent_; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  int n_ = 0;
  std::vector<Vertex> parent_, first_, last_, prev_, next_;
  std::vector<int> count_, smaller_count_;
  std::vector<Vertex> smaller_xor_;
};

/// Forest obtained by removing vertices in `order`, built by reverse-order union-find.
ElimForest forest_from_ordering(const Graph& g, std::span<const Vertex> order);

class PeoGraph;
/// Removal in increasing order.
ElimForest initial_forest(const PeoGraph& pg);

/// Full check of the elimination-forest property against g.
bool validate(const Graph& g, const ElimForest& f);

/// "0 1 2": parents of 1..n separated by single blanks.
std::string canonical_key(const ElimForest& f);
/// Inverse of canonical_key.
ElimForest forest_from_key(const std::string& key);

using Tube = std::vector<Vertex>;
/// Subtree vertex sets, each sorted, sorted lexicographically.
std::vector<Tube> to_tubing(const Graph& g, const ElimForest& f);
/// "{1,2} {2}"
std::string format_tubing(const std::vector<Tube>& tubing);
bool is_valid_tubing(const Graph& g, const std::vector<Tube>& tubing);

/// For every k > j, the smaller vertices of k's tree are all below k or none is.
bool is_clean_for(const ElimForest& f, Vertex j);

}  // namespace elimtree
