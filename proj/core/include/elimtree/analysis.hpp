#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elimtree/graph.hpp"
#include "elimtree/peo_graph.hpp"

namespace elimtree {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex subsets are 64-bit masks indexed by vertex label.
inline constexpr int kMaxCountVertices = 62;

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Number of elimination forests, memoized over connected induced subgraphs.
/// Throws SizeLimitError above kMaxCountVertices vertices.
BigInt count_forests(const Graph& g);

struct PrefixParity {
  int nu = 0;
  BigInt count;
  bool even = false;
};

/// e(G^[nu]) and its parity for nu = 2..n-1.
std::vector<PrefixParity> prefix_parities(const PeoGraph& pg);

struct CyclicityVerdict {
  bool cyclic = false;
  std::vector<std::string> reasons;
  std::vector<PrefixParity> parities;
};

/// Whether the last forest of the rotation Gray code is one rotation away
/// from the first. Levels where nu is isolated in G^[nu] do not constrain the
/// outcome; the first rotatable level always closes up, and every later
/// rotatable level nu needs e(G^[nu-1]) to be even.
CyclicityVerdict predict_cyclic(const PeoGraph& pg);

struct CyclicOrdering {
  std::vector<Vertex> order;
  std::string rule;
};

/// Searches for a PEO of g (original labels) under which the Gray code is
/// cyclic, trying: any PEO, an isolated edge first, an H-appendix (subset
/// search, at most `appendix_limit` vertices), and a simplicial vertex last
/// over one of those. Throws NotPeoError if g is not chordal.
std::optional<CyclicOrdering> choose_cyclic_peo(const Graph& g, int appendix_limit = 12);

}  // namespace elimtree
