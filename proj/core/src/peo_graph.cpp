#include "elimtree/peo_graph.hpp"

#include <algorithm>
#include <numeric>

namespace elimtree {

PeoGraph::PeoGraph(Graph g) : g_(std::move(g)) {
  std::vector<Vertex> identity(static_cast<std::size_t>(g_.size()));
  std::iota(identity.begin(), identity.end(), 1);
  if (!is_peo(g_, identity)) throw NotPeoError("labelling 1..n is not a perfect elimination ordering");
  to_original_.resize(identity.size() + 1);
  std::iota(to_original_.begin(), to_original_.end(), 0);
  to_peo_ = to_original_;
  compute_metadata();
}

void PeoGraph::compute_metadata() {
  const int n = g_.size();
  lower_count_.assign(static_cast<std::size_t>(n) + 1, 0);
  alpha_.assign(static_cast<std::size_t>(n) + 1, 1);
  rho_ = 0;
  Vertex last_rotatable = 1;
  for (Vertex v = 1; v <= n; ++v) {
    const auto& nb = g_.neighbors(v);
    lower_count_[static_cast<std::size_t>(v)] =
        static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    if (rotatable(v)) {
      alpha_[static_cast<std::size_t>(v)] = last_rotatable;
      last_rotatable = v;
      rho_ = v;
    }
  }
  sigma_ = n == 0 ? 0 : max_star_sigma(g_).value;
}

PeoGraph PeoGraph::prefix(int nu) const {
  PeoGraph out(g_.prefix(nu));
  out.to_original_.assign(to_original_.begin(), to_original_.begin() + nu + 1);
  out.to_peo_.assign(to_peo_.size(), 0);
  for (Vertex v = 1; v <= nu; ++v) out.to_peo_[static_cast<std::size_t>(out.to_original_[static_cast<std::size_t>(v)])] = v;
  return out;
}

PeoGraph relabel_to_peo(const Graph& g, std::span<const Vertex> order) {
  if (!is_peo(g, order)) throw NotPeoError("ordering is not a perfect elimination ordering");
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Vertex> to_peo(n + 1, 0), to_original(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    to_peo[static_cast<std::size_t>(order[k])] = static_cast<Vertex>(k + 1);
    to_original[k + 1] = order[k];
  }
  PeoGraph out;
  out.g_ = g.relabeled(to_peo);
  out.to_peo_ = std::move(to_peo);
  out.to_original_ = std::move(to_original);
  out.compute_metadata();
  return out;
}

PeoGraph certify(const Graph& g) {
  std::vector<Vertex> identity(static_cast<std::size_t>(g.size()));
  std::iota(identity.begin(), identity.end(), 1);
  if (is_peo(g, identity)) return relabel_to_peo(g, identity);
  const auto peo = chordal_peo(g);
  if (!peo) throw NotPeoError("graph is not chordal");
  return relabel_to_peo(g, *peo);
}

}  // namespace elimtree
